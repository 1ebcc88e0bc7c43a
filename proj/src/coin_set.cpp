#include "coinfrac/coin_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "coinfrac/arith.hpp"

namespace coinfrac {

namespace {

// Total amounts are capped so every derived quantity stays in int64.
constexpr std::int64_t kAmountLimit = (std::int64_t{1} << 62) - 1;

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("coin set: bad integer '" + std::string(text) + "'");
    return value;
}

} // namespace

CoinSet::CoinSet(std::vector<CoinEntry> entries) {
    for (const auto& e : entries) {
        if (e.value <= 0)
            throw std::invalid_argument("coin set: face values must be positive");
        if (e.count <= 0)
            throw std::invalid_argument("coin set: counts must be positive");
    }
    std::sort(entries.begin(), entries.end(),
              [](const CoinEntry& a, const CoinEntry& b) { return a.value < b.value; });
    // Merge duplicate face values; counts add. Values are >= 1, so a count
    // beyond the amount limit already means the amount is out of range.
    for (const auto& e : entries) {
        if (!entries_.empty() && entries_.back().value == e.value) {
            if (static_cast<__int128>(entries_.back().count) + e.count > kAmountLimit)
                throw std::range_error("coin set: total amount exceeds the 63-bit range");
            entries_.back().count += e.count;
        } else {
            entries_.push_back(e);
        }
    }
    __int128 amount = 0;
    for (const auto& e : entries_) {
        amount += static_cast<__int128>(e.value) * e.count;
        if (amount > kAmountLimit)
            throw std::range_error("coin set: total amount exceeds the 63-bit range");
    }
    amount_ = static_cast<std::int64_t>(amount);
}

CoinSet CoinSet::parse(std::string_view text) {
    if (text.find_first_not_of(' ') == std::string_view::npos)
        return CoinSet(); // empty text form round-trips to the empty set
    std::vector<CoinEntry> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        // Trim surrounding spaces.
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        if (item.empty())
            throw std::invalid_argument("coin set: empty item in '" + std::string(text) + "'");
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("coin set: expected value:count in '" +
                                        std::string(item) + "'");
        entries.push_back({parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))});
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    return CoinSet(std::move(entries));
}

std::string CoinSet::format() const {
    std::string out;
    for (const auto& e : entries_) {
        if (!out.empty())
            out += ',';
        out += std::to_string(e.value);
        out += ':';
        out += std::to_string(e.count);
    }
    return out;
}

GeometricFamilySpec::GeometricFamilySpec(std::int64_t base, std::int64_t coins_each,
                                         std::int64_t levels)
    : base_(base), coins_(coins_each), levels_(levels), scale_power_(1) {
    if (base < 2)
        throw std::invalid_argument("family: base must be >= 2");
    if (coins_each < 1)
        throw std::invalid_argument("family: coin count must be >= 1");
    if (levels < 0)
        throw std::invalid_argument("family: number of denominations must be >= 0");
    scale_power_ = checked_pow(base, levels); // throws std::range_error on overflow
    amount();                                 // reject amount overflow at construction
}

std::int64_t GeometricFamilySpec::amount() const {
    // c * (r^m - 1) / (r - 1), computed without intermediate overflow.
    const std::int64_t geometric_sum = (scale_power_ - 1) / (base_ - 1);
    const __int128 total = static_cast<__int128>(coins_) * geometric_sum;
    if (total > kAmountLimit)
        throw std::range_error("family: total amount exceeds the 63-bit range");
    return static_cast<std::int64_t>(total);
}

CoinSet make_geometric(const GeometricFamilySpec& spec) {
    std::vector<CoinEntry> entries;
    std::int64_t value = 1;
    for (std::int64_t i = 0; i < spec.levels(); ++i) {
        entries.push_back({value, spec.coins_each()});
        if (i + 1 < spec.levels())
            value = checked_mul(value, spec.base());
    }
    return CoinSet(std::move(entries));
}

CoinSet make_cent() {
    return CoinSet({{1, 4}, {5, 1}, {10, 2}, {25, 1}, {50, 1}});
}

} // namespace coinfrac
