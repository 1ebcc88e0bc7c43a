#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coinfrac {

struct CoinEntry {
    std::int64_t value = 0; ///< face value, > 0
    std::int64_t count = 0; ///< number of coins of this value, >= 1

    bool operator==(const CoinEntry&) const = default;
};

/// An immutable multiset of coins, stored canonically: entries sorted by
/// strictly increasing face value, duplicate values merged, total amount
/// bounded so that it fits a signed 63-bit integer.
class CoinSet {
public:
    /// The empty coin set (amount 0, one trivial division).
    CoinSet() = default;

    /// Canonicalizes and validates; throws std::invalid_argument on
    /// non-positive values/counts and std::range_error on amount overflow.
    explicit CoinSet(std::vector<CoinEntry> entries);

    const std::vector<CoinEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Total money amount, sum of value*count over all entries.
    std::int64_t amount() const { return amount_; }

    /// Parses the `value:count,value:count,...` text form.
    static CoinSet parse(std::string_view text);

    /// Canonical text form, `value:count` pairs joined by commas.
    std::string format() const;

    bool operator==(const CoinSet&) const = default;

private:
    std::vector<CoinEntry> entries_;
    std::int64_t amount_ = 0;
};

/// A geometric family of coin sets: face values 1, r, ..., r^(m-1),
/// each present c times.
class GeometricFamilySpec {
public:
    /// Validates r >= 2, c >= 1, m >= 0 and that r^m and the total amount
    /// stay in range; throws std::range_error / std::invalid_argument.
    GeometricFamilySpec(std::int64_t base, std::int64_t coins_each, std::int64_t levels);

    std::int64_t base() const { return base_; }       ///< r
    std::int64_t coins_each() const { return coins_; } ///< c
    std::int64_t levels() const { return levels_; }    ///< m, number of denominations

    /// r^m (precomputed at validation).
    std::int64_t scale_power() const { return scale_power_; }

    /// c * (r^m - 1) / (r - 1), the amount of the instantiated coin set.
    std::int64_t amount() const;

    bool operator==(const GeometricFamilySpec&) const = default;

private:
    std::int64_t base_;
    std::int64_t coins_;
    std::int64_t levels_;
    std::int64_t scale_power_;
};

/// Instantiates the coin set of a geometric family.
CoinSet make_geometric(const GeometricFamilySpec& spec);

/// The US-cent reference set: values 1,5,10,25,50 with counts 4,1,2,1,1.
CoinSet make_cent();

} // namespace coinfrac
