#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace coinfrac {

/// One way of dividing: the money amount received by each player.
using DivisionPoint = std::vector<std::int64_t>;

/// A finite multiset of division points. `points` maps each reachable
/// share vector to its multiplicity, i.e. the number of distinct
/// per-denomination composition tuples that realize it. Keys iterate in
/// ascending lexicographic order, which is the canonical output order.
struct DivisionSet {
    int players = 1;
    std::int64_t total = 0;
    std::map<DivisionPoint, std::int64_t> points;

    std::size_t size() const { return points.size(); }

    std::int64_t weighted_count() const {
        std::int64_t sum = 0;
        for (const auto& [p, mult] : points)
            sum += mult;
        return sum;
    }

    std::int64_t max_multiplicity() const {
        std::int64_t best = 0;
        for (const auto& [p, mult] : points)
            if (mult > best)
                best = mult;
        return best;
    }

    bool operator==(const DivisionSet&) const = default;
};

} // namespace coinfrac
