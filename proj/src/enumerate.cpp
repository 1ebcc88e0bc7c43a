#include "coinfrac/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinfrac/arith.hpp"
#include "coinfrac/errors.hpp"

namespace coinfrac {

std::int64_t composition_count(std::int64_t total, int parts) {
    if (total < 0 || parts < 1)
        throw std::domain_error("composition_count: need total >= 0 and parts >= 1");
    return binomial(total + parts - 1, parts - 1);
}

std::int64_t projected_tuple_count(const CoinSet& coins, int players) {
    __int128 product = 1;
    for (const auto& e : coins.entries()) {
        product *= composition_count(e.count, players);
        if (product > INT64_MAX)
            return INT64_MAX;
    }
    return static_cast<std::int64_t>(product);
}

std::vector<DivisionPoint> compositions(std::int64_t total, int parts) {
    if (total < 0 || parts < 1)
        throw std::domain_error("compositions: need total >= 0 and parts >= 1");
    std::vector<DivisionPoint> out;
    DivisionPoint current(static_cast<std::size_t>(parts), 0);
    // Build ascending lexicographically, then flip to descending.
    auto rec = [&](auto&& self, int index, std::int64_t remaining) -> void {
        if (index == parts - 1) {
            current[static_cast<std::size_t>(index)] = remaining;
            out.push_back(current);
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            self(self, index + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    std::reverse(out.begin(), out.end());
    return out;
}

DivisionSet enumerate_divisions(const CoinSet& coins, int players, std::int64_t cap) {
    if (players < 1)
        throw std::domain_error("enumerate_divisions: need at least one player");
    if (cap < 1)
        throw std::domain_error("enumerate_divisions: cap must be positive");
    if (projected_tuple_count(coins, players) > cap)
        throw ResourceCapError("enumerate_divisions: projected tuple count exceeds cap");

    DivisionSet out;
    out.players = players;
    out.total = coins.amount();

    // Per-denomination share increments, largest face value first.
    struct Level {
        std::vector<DivisionPoint> increments;
    };
    std::vector<Level> levels;
    const auto& entries = coins.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        Level level;
        for (auto& comp : compositions(it->count, players)) {
            DivisionPoint inc = comp;
            for (auto& share : inc)
                share *= it->value;
            level.increments.push_back(std::move(inc));
        }
        levels.push_back(std::move(level));
    }

    DivisionPoint shares(static_cast<std::size_t>(players), 0);
    auto walk = [&](auto&& self, std::size_t depth) -> void {
        if (depth == levels.size()) {
            out.points[shares] += 1;
            return;
        }
        for (const auto& inc : levels[depth].increments) {
            for (int i = 0; i < players; ++i)
                shares[static_cast<std::size_t>(i)] += inc[static_cast<std::size_t>(i)];
            self(self, depth + 1);
            for (int i = 0; i < players; ++i)
                shares[static_cast<std::size_t>(i)] -= inc[static_cast<std::size_t>(i)];
        }
    };
    walk(walk, 0);
    return out;
}

DivisionSet multiplicity_stratum(const DivisionSet& divisions, std::int64_t k) {
    if (k < 1)
        throw std::domain_error("multiplicity_stratum: k must be >= 1");
    DivisionSet out;
    out.players = divisions.players;
    out.total = divisions.total;
    for (const auto& [point, mult] : divisions.points)
        if (mult == k)
            out.points.emplace(point, mult);
    return out;
}

namespace {

// Guard for the completeness bit table; 1e9+1 bits is ~128 MB.
constexpr std::int64_t kSubsetSumAmountLimit = 1'000'000'000;

class BitTable {
public:
    explicit BitTable(std::int64_t bits)
        : bits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

    void set(std::int64_t i) { words_[static_cast<std::size_t>(i >> 6)] |= one_ << (i & 63); }

    bool test(std::int64_t i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }

    // table |= table << shift
    void shift_or(std::int64_t shift) {
        if (shift >= bits_)
            return;
        const auto word_shift = static_cast<std::size_t>(shift >> 6);
        const int bit_shift = static_cast<int>(shift & 63);
        for (std::size_t i = words_.size(); i-- > word_shift;) {
            std::uint64_t v = words_[i - word_shift] << bit_shift;
            if (bit_shift != 0 && i > word_shift)
                v |= words_[i - word_shift - 1] >> (64 - bit_shift);
            words_[i] |= v;
        }
    }

private:
    static constexpr std::uint64_t one_ = 1;
    std::int64_t bits_;
    std::vector<std::uint64_t> words_;
};

} // namespace

std::optional<std::int64_t> first_unreachable(const CoinSet& coins) {
    const std::int64_t amount = coins.amount();
    if (amount == 0)
        return std::nullopt; // nothing in [1, 0] to reach
    if (amount > kSubsetSumAmountLimit)
        throw ResourceCapError("first_unreachable: amount too large for the bit table");

    BitTable reachable(amount + 1);
    reachable.set(0);
    for (const auto& e : coins.entries()) {
        // Binary splitting turns the bounded count into log2(count) shifts.
        std::int64_t remaining = e.count;
        std::int64_t chunk = 1;
        while (remaining > 0) {
            const std::int64_t take = std::min(chunk, remaining);
            reachable.shift_or(e.value * take);
            remaining -= take;
            chunk <<= 1;
        }
    }
    for (std::int64_t v = 1; v <= amount; ++v)
        if (!reachable.test(v))
            return v;
    return std::nullopt;
}

bool is_complete(const CoinSet& coins) {
    return !first_unreachable(coins).has_value();
}

} // namespace coinfrac
