#include "coinfrac/embed.hpp"

#include <cmath>
#include <stdexcept>

namespace coinfrac {

SimplexEmbedding::SimplexEmbedding(int players) : players_(players) {
    if (players < 2)
        throw std::domain_error("embedding: need at least two players");
    const auto s = static_cast<std::size_t>(players);

    // u_i = e_i - e_s for i = 1..s-1, as exact rational vectors in R^s.
    std::vector<std::vector<Rational>> u(s - 1, std::vector<Rational>(s, Rational(0)));
    for (std::size_t i = 0; i < s - 1; ++i) {
        u[i][i] = Rational(1);
        u[i][s - 1] = Rational(-1);
    }

    auto dot = [s](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational sum(0);
        for (std::size_t k = 0; k < s; ++k)
            sum = sum + a[k] * b[k];
        return sum;
    };

    // Gram-Schmidt without normalization; all coefficients stay rational.
    for (std::size_t i = 0; i < s - 1; ++i) {
        std::vector<Rational> w = u[i];
        for (std::size_t j = 0; j < i; ++j) {
            const Rational coeff = dot(u[i], ortho_[j]) * Rational(norm_sq_[j].den(),
                                                                   norm_sq_[j].num());
            for (std::size_t k = 0; k < s; ++k)
                w[k] = w[k] - coeff * ortho_[j][k];
        }
        norm_sq_.push_back(dot(w, w));
        inv_norm_.push_back(1.0 / std::sqrt(norm_sq_.back().to_double()));
        ortho_.push_back(std::move(w));
    }
}

EmbeddedPoint SimplexEmbedding::operator()(const DivisionPoint& point) const {
    if (point.size() != static_cast<std::size_t>(players_))
        throw std::domain_error("embedding: point has the wrong number of shares");
    const auto s = static_cast<std::size_t>(players_);

    // x = sum_i shares[i] * u_i = (n_1, ..., n_{s-1}, -sum n_i) in R^s.
    std::int64_t head_sum = 0;
    for (std::size_t i = 0; i < s - 1; ++i)
        head_sum += point[i];

    EmbeddedPoint out;
    out.source = point;
    out.coords.resize(s - 1);
    for (std::size_t j = 0; j < s - 1; ++j) {
        Rational proj(0);
        for (std::size_t k = 0; k < s - 1; ++k)
            proj = proj + ortho_[j][k] * Rational(point[k]);
        proj = proj + ortho_[j][s - 1] * Rational(-head_sum);
        out.coords[j] = proj.to_double() * inv_norm_[j];
    }
    return out;
}

std::vector<std::vector<double>> SimplexEmbedding::basis() const {
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < ortho_.size(); ++j) {
        std::vector<double> row(static_cast<std::size_t>(players_));
        for (std::size_t k = 0; k < row.size(); ++k)
            row[k] = ortho_[j][k].to_double() * inv_norm_[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

EmbeddedPoint embed(const DivisionPoint& point, int players) {
    return SimplexEmbedding(players)(point);
}

std::vector<std::pair<EmbeddedPoint, std::int64_t>> embed_set(const DivisionSet& divisions) {
    if (divisions.points.empty())
        throw std::domain_error("embed_set: division set is empty");
    SimplexEmbedding embedding(divisions.players);
    std::vector<std::pair<EmbeddedPoint, std::int64_t>> out;
    out.reserve(divisions.points.size());
    for (const auto& [point, mult] : divisions.points)
        out.emplace_back(embedding(point), mult);
    return out;
}

} // namespace coinfrac
