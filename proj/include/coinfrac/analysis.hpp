#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "coinfrac/division.hpp"
#include "coinfrac/ifs.hpp"
#include "coinfrac/rational.hpp"

namespace coinfrac {

/// Connectivity class of the limiting pattern, decided by comparing the
/// per-denomination coin count c against base-1.
enum class RamificationClass {
    TotallyDisconnected, ///< c < r-1: gaps between copies
    FinitelyRamified,    ///< c = r-1: copies touch at corner points
    InfinitelyRamified,  ///< c > r-1: copies overlap
};

std::string_view to_string(RamificationClass c);

/// Similarity dimension ln(map_count)/ln(inverse_ratio), together with
/// the formula inputs. `defined` is false where overlap makes the
/// similarity formula inapplicable; `value` is NaN in that case.
struct DimensionResult {
    bool defined = false;
    double value = 0.0;
    std::int64_t map_count = 0;     ///< number of contraction maps
    std::int64_t inverse_ratio = 0; ///< maps contract by 1/inverse_ratio
};

/// Hausdorff distance between two nonempty finite point sets under the
/// Euclidean norm. Exact points, floating-point distances (relative error
/// <= 1e-12 for coordinates of magnitude <= 1). Dimension mismatch or an
/// empty set is a domain error.
double hausdorff_distance(const RationalPointSet& a, const RationalPointSet& b);

/// Same metric on plain coordinate vectors.
double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b);

namespace detail {
/// Exhaustive O(|a|*|b|) reference path.
double hausdorff_exhaustive(const std::vector<std::vector<double>>& a,
                            const std::vector<std::vector<double>>& b);
/// Uniform-grid accelerated path; identical results to the exhaustive one.
double hausdorff_indexed(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b);
} // namespace detail

/// Similarity dimension of the family pattern for the given player count
/// (three players by default): map_count = C(c+players-1, players-1),
/// ratio 1/r. Defined only when c <= r-1 (no overlap).
DimensionResult similarity_dimension(std::int64_t r, std::int64_t c, int players = 3);

/// Dimension of the two-map attractor reached by dividing a one-of-each
/// power-of-r coin set between two players: ln 2 / ln r. Always defined.
DimensionResult cantor_dimension(std::int64_t r);

/// Classifies by comparing c against r-1; purely arithmetic.
RamificationClass classify(std::int64_t r, std::int64_t c);

/// Maps a two-player division point of the one-of-each power-of-three set
/// with m denominations to 2 * first_share / 3^m, as an exact rational.
/// Throws std::domain_error when the first share is out of range.
Rational cantor_phi(std::int64_t m, const DivisionPoint& point);

/// True iff every base-r digit of x (whose denominator must be a power of
/// r, else domain error) lies in {0, r-1}. Computed by exact
/// division/remainder on the numerator, never by float base conversion.
bool is_cantor_digit_string(const Rational& x, std::int64_t r);

} // namespace coinfrac
