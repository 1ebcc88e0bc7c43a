#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coinfrac/division.hpp"
#include "coinfrac/rational.hpp"

namespace coinfrac {

/// A division point mapped isometrically into (players-1)-dimensional
/// Euclidean coordinates.
struct EmbeddedPoint {
    std::vector<double> coords;
    DivisionPoint source;
};

/// Isometric embedding of the simplex hyperplane sum(shares) = const into
/// R^(players-1). Built by Gram-Schmidt over the difference vectors
/// u_i = e_i - e_players, kept in exact rational arithmetic; the only
/// floating-point steps are the final square-root normalizations.
class SimplexEmbedding {
public:
    /// players >= 2; one player leaves nothing to embed (domain error).
    explicit SimplexEmbedding(int players);

    int players() const { return players_; }

    EmbeddedPoint operator()(const DivisionPoint& point) const;

    /// The orthonormal basis vectors as rows in R^players (for checking).
    std::vector<std::vector<double>> basis() const;

private:
    int players_;
    std::vector<std::vector<Rational>> ortho_; ///< unnormalized orthogonal vectors
    std::vector<Rational> norm_sq_;            ///< their squared norms, exact
    std::vector<double> inv_norm_;             ///< 1/sqrt(norm_sq)
};

/// Embeds one point (convenience wrapper over SimplexEmbedding).
EmbeddedPoint embed(const DivisionPoint& point, int players);

/// Embeds every point of a division set in canonical order, carrying
/// multiplicities through.
std::vector<std::pair<EmbeddedPoint, std::int64_t>> embed_set(const DivisionSet& divisions);

} // namespace coinfrac
