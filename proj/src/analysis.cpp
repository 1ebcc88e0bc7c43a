#include "coinfrac/analysis.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "coinfrac/arith.hpp"

namespace coinfrac {

std::string_view to_string(RamificationClass c) {
    switch (c) {
    case RamificationClass::TotallyDisconnected: return "TotallyDisconnected";
    case RamificationClass::FinitelyRamified: return "FinitelyRamified";
    case RamificationClass::InfinitelyRamified: return "InfinitelyRamified";
    }
    return "?";
}

namespace detail {

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

double directed_exhaustive(const std::vector<std::vector<double>>& from,
                           const std::vector<std::vector<double>>& to) {
    double worst = 0.0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) {
            const double d = squared_distance(a, b);
            if (d < best)
                best = d;
        }
        if (best > worst)
            worst = best;
    }
    return worst;
}

// Uniform grid over `to` with exact expanding-ring nearest-neighbor
// queries; prunes distance evaluations without changing any result.
class PointGrid {
public:
    explicit PointGrid(const std::vector<std::vector<double>>& points)
        : points_(points), dim_(points.front().size()) {
        lo_.assign(dim_, std::numeric_limits<double>::infinity());
        std::vector<double> hi(dim_, -std::numeric_limits<double>::infinity());
        for (const auto& p : points_)
            for (std::size_t d = 0; d < dim_; ++d) {
                lo_[d] = std::min(lo_[d], p[d]);
                hi[d] = std::max(hi[d], p[d]);
            }
        double extent = 0.0;
        for (std::size_t d = 0; d < dim_; ++d)
            extent = std::max(extent, hi[d] - lo_[d]);
        const double cells_per_axis =
            std::max(1.0, std::floor(std::pow(static_cast<double>(points_.size()),
                                              1.0 / static_cast<double>(dim_))));
        cell_ = extent / cells_per_axis;
        degenerate_ = !(cell_ > 0.0);
        if (degenerate_)
            return;
        cell_lo_.assign(dim_, std::numeric_limits<long long>::max());
        cell_hi_.assign(dim_, std::numeric_limits<long long>::min());
        for (std::size_t i = 0; i < points_.size(); ++i) {
            const std::vector<long long> c = cell_of(points_[i]);
            for (std::size_t d = 0; d < dim_; ++d) {
                cell_lo_[d] = std::min(cell_lo_[d], c[d]);
                cell_hi_[d] = std::max(cell_hi_[d], c[d]);
            }
            cells_[key(c)].push_back(i);
        }
    }

    double nearest_squared(const std::vector<double>& query) const {
        if (degenerate_)
            return squared_distance(query, points_.front());
        const std::vector<long long> center = cell_of(query);
        // Beyond this ring every populated cell has been visited.
        long long last_ring = 0;
        for (std::size_t d = 0; d < dim_; ++d) {
            last_ring = std::max(last_ring, std::llabs(center[d] - cell_lo_[d]));
            last_ring = std::max(last_ring, std::llabs(center[d] - cell_hi_[d]));
        }
        double best = std::numeric_limits<double>::infinity();
        for (long long ring = 0; ring <= last_ring; ++ring) {
            // Points in cells of Chebyshev ring k are at least (k-1)*cell away.
            if (ring > 0 && best < std::numeric_limits<double>::infinity()) {
                const double floor_dist = static_cast<double>(ring - 1) * cell_;
                if (floor_dist * floor_dist > best)
                    return best;
            }
            visit_ring(center, ring, [&](const std::vector<long long>& cell) {
                const auto it = cells_.find(key(cell));
                if (it == cells_.end())
                    return;
                for (const std::size_t idx : it->second) {
                    const double d = squared_distance(query, points_[idx]);
                    if (d < best)
                        best = d;
                }
            });
        }
        return best;
    }

private:
    std::vector<long long> cell_of(const std::vector<double>& p) const {
        std::vector<long long> c(dim_);
        for (std::size_t d = 0; d < dim_; ++d)
            c[d] = static_cast<long long>(std::floor((p[d] - lo_[d]) / cell_));
        return c;
    }

    static std::size_t key(const std::vector<long long>& cell) {
        std::size_t h = 1469598103934665603ull;
        for (const long long v : cell) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }

    template <typename Fn>
    void visit_ring(const std::vector<long long>& center, long long ring, Fn&& fn) const {
        std::vector<long long> cell(dim_);
        visit_ring_rec(center, ring, 0, false, cell, fn);
    }

    template <typename Fn>
    void visit_ring_rec(const std::vector<long long>& center, long long ring, std::size_t d,
                        bool boundary_fixed, std::vector<long long>& cell, Fn&& fn) const {
        if (d == dim_) {
            if (boundary_fixed || ring == 0)
                fn(cell);
            return;
        }
        const bool last = (d == dim_ - 1);
        for (long long off = -ring; off <= ring; ++off) {
            const bool on_boundary = (off == ring || off == -ring);
            if (last && !boundary_fixed && !on_boundary && ring != 0)
                continue; // at least one axis must sit on the ring shell
            cell[d] = center[d] + off;
            visit_ring_rec(center, ring, d + 1, boundary_fixed || on_boundary, cell, fn);
        }
    }

    const std::vector<std::vector<double>>& points_;
    std::size_t dim_;
    std::vector<double> lo_;
    std::vector<long long> cell_lo_;
    std::vector<long long> cell_hi_;
    double cell_ = 0.0;
    bool degenerate_ = false;
    std::unordered_map<std::size_t, std::vector<std::size_t>> cells_;
};

double directed_indexed(const std::vector<std::vector<double>>& from,
                        const std::vector<std::vector<double>>& to) {
    PointGrid grid(to);
    double worst = 0.0;
    for (const auto& a : from)
        worst = std::max(worst, grid.nearest_squared(a));
    return worst;
}

} // namespace

double hausdorff_exhaustive(const std::vector<std::vector<double>>& a,
                            const std::vector<std::vector<double>>& b) {
    return std::sqrt(std::max(directed_exhaustive(a, b), directed_exhaustive(b, a)));
}

double hausdorff_indexed(const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b) {
    return std::sqrt(std::max(directed_indexed(a, b), directed_indexed(b, a)));
}

} // namespace detail

namespace {

constexpr std::size_t kIndexThreshold = 10'000;

void check_clouds(const std::vector<std::vector<double>>& a,
                  const std::vector<std::vector<double>>& b) {
    if (a.empty() || b.empty())
        throw std::domain_error("hausdorff_distance: sets must be nonempty");
    const std::size_t dim = a.front().size();
    for (const auto& p : a)
        if (p.size() != dim)
            throw std::domain_error("hausdorff_distance: ragged coordinates");
    for (const auto& p : b)
        if (p.size() != dim)
            throw std::domain_error("hausdorff_distance: dimension mismatch");
}

std::vector<std::vector<double>> to_cloud(const RationalPointSet& set) {
    std::vector<std::vector<double>> cloud;
    cloud.reserve(set.points.size());
    for (const auto& [point, mult] : set.points) {
        std::vector<double> coords(point.size());
        for (std::size_t i = 0; i < point.size(); ++i)
            coords[i] = point[i].to_double();
        cloud.push_back(std::move(coords));
    }
    return cloud;
}

} // namespace

double hausdorff_distance(const std::vector<std::vector<double>>& a,
                          const std::vector<std::vector<double>>& b) {
    check_clouds(a, b);
    if (a.size() > kIndexThreshold || b.size() > kIndexThreshold)
        return detail::hausdorff_indexed(a, b);
    return detail::hausdorff_exhaustive(a, b);
}

double hausdorff_distance(const RationalPointSet& a, const RationalPointSet& b) {
    if (a.points.empty() || b.points.empty())
        throw std::domain_error("hausdorff_distance: sets must be nonempty");
    if (a.dim != b.dim)
        throw std::domain_error("hausdorff_distance: dimension mismatch");
    return hausdorff_distance(to_cloud(a), to_cloud(b));
}

DimensionResult similarity_dimension(std::int64_t r, std::int64_t c, int players) {
    if (r < 2)
        throw std::domain_error("similarity_dimension: base must be >= 2");
    if (c < 1)
        throw std::domain_error("similarity_dimension: coin count must be >= 1");
    if (players < 1)
        throw std::domain_error("similarity_dimension: need at least one player");
    DimensionResult out;
    out.map_count = binomial(c + players - 1, players - 1);
    out.inverse_ratio = r;
    out.defined = (c <= r - 1);
    out.value = out.defined ? std::log(static_cast<double>(out.map_count)) /
                                  std::log(static_cast<double>(r))
                            : std::numeric_limits<double>::quiet_NaN();
    return out;
}

DimensionResult cantor_dimension(std::int64_t r) {
    if (r < 2)
        throw std::domain_error("cantor_dimension: base must be >= 2");
    DimensionResult out;
    out.defined = true;
    out.map_count = 2;
    out.inverse_ratio = r;
    out.value = std::log(2.0) / std::log(static_cast<double>(r));
    return out;
}

RamificationClass classify(std::int64_t r, std::int64_t c) {
    if (r < 2)
        throw std::domain_error("classify: base must be >= 2");
    if (c < 1)
        throw std::domain_error("classify: coin count must be >= 1");
    if (c < r - 1)
        return RamificationClass::TotallyDisconnected;
    if (c == r - 1)
        return RamificationClass::FinitelyRamified;
    return RamificationClass::InfinitelyRamified;
}

Rational cantor_phi(std::int64_t m, const DivisionPoint& point) {
    if (m < 1)
        throw std::domain_error("cantor_phi: need m >= 1");
    if (point.size() != 2)
        throw std::domain_error("cantor_phi: a two-player point is required");
    const std::int64_t denom = checked_pow(3, m);
    const std::int64_t total = (denom - 1) / 2;
    const std::int64_t first_share = point[0];
    if (first_share < 0 || first_share > total)
        throw std::domain_error("cantor_phi: first share out of range");
    return Rational(2 * first_share, denom);
}

bool is_cantor_digit_string(const Rational& x, std::int64_t r) {
    if (r < 2)
        throw std::domain_error("is_cantor_digit_string: base must be >= 2");
    if (x < Rational(0) || x > Rational(1))
        throw std::domain_error("is_cantor_digit_string: x must lie in [0, 1]");
    std::int64_t den = x.den();
    std::int64_t digits = 0;
    while (den > 1) {
        if (den % r != 0)
            throw std::domain_error("is_cantor_digit_string: denominator is not a power of the base");
        den /= r;
        ++digits;
    }
    if (x == Rational(1))
        return true; // the endpoint 1 = 0.(r-1)(r-1)... belongs to the attractor
    std::int64_t numerator = x.num();
    for (std::int64_t i = 0; i < digits; ++i) {
        const std::int64_t digit = numerator % r;
        if (digit != 0 && digit != r - 1)
            return false;
        numerator /= r;
    }
    return true;
}

} // namespace coinfrac
