#pragma once

#include <cstdint>
#include <optional>

#include "coinfrac/coin_set.hpp"
#include "coinfrac/division.hpp"

namespace coinfrac {

/// Default cap on the projected number of composition tuples an
/// enumeration may walk before it refuses with ResourceCapError.
inline constexpr std::int64_t kDefaultTupleCap = 1'000'000'000;

/// Number of ways to write `total` as an ordered sum of `parts`
/// non-negative integers: C(total + parts - 1, parts - 1).
std::int64_t composition_count(std::int64_t total, int parts);

/// Projected number of composition tuples for dividing `coins` among
/// `players`, i.e. the product of per-denomination composition counts.
/// Saturates at INT64_MAX instead of overflowing.
std::int64_t projected_tuple_count(const CoinSet& coins, int players);

/// All non-negative integer `parts`-tuples summing to `total`, in
/// descending lexicographic order.
std::vector<DivisionPoint> compositions(std::int64_t total, int parts);

/// Brute-force enumeration of every division of `coins` among `players`.
/// Walks one composition of each denomination's count per player tuple;
/// coins of equal face value are indistinguishable. The multiplicity of a
/// point is the number of tuples that realize it.
/// Throws ResourceCapError when the projected tuple count exceeds `cap`.
DivisionSet enumerate_divisions(const CoinSet& coins, int players,
                                std::int64_t cap = kDefaultTupleCap);

/// The sub-multiset of points whose multiplicity is exactly `k`, each
/// retained with multiplicity `k`. Empty result is valid.
DivisionSet multiplicity_stratum(const DivisionSet& divisions, std::int64_t k);

/// True iff every integer amount in [1, amount(coins)] is a sub-multiset
/// sum of the coin set. Bounded-count subset-sum DP over a bit table of
/// size amount+1.
bool is_complete(const CoinSet& coins);

/// Smallest amount in [1, amount(coins)] that no sub-multiset reaches,
/// or nullopt when the set is complete.
std::optional<std::int64_t> first_unreachable(const CoinSet& coins);

} // namespace coinfrac
