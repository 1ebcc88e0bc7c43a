#include "coinfrac/ifs.hpp"

#include <stdexcept>

#include "coinfrac/arith.hpp"
#include "coinfrac/errors.hpp"

namespace coinfrac {

GeneratorSet generator_set(std::int64_t degree, int players) {
    if (degree < 1)
        throw std::domain_error("generator_set: degree must be >= 1");
    if (players < 1)
        throw std::domain_error("generator_set: need at least one player");
    composition_count(degree, players); // throws std::range_error on count overflow
    GeneratorSet out;
    out.players = players;
    out.degree = degree;
    out.points = compositions(degree, players);
    return out;
}

IfsSystem make_ifs(const GeometricFamilySpec& spec, int players) {
    return IfsSystem{spec.base(), generator_set(spec.coins_each(), players)};
}

DivisionSet construct_inductive(const GeometricFamilySpec& spec, int players,
                                std::int64_t cap) {
    if (players < 1)
        throw std::domain_error("construct_inductive: need at least one player");
    if (cap < 1)
        throw std::domain_error("construct_inductive: cap must be positive");

    const std::int64_t per_level = composition_count(spec.coins_each(), players);
    __int128 projected = 1;
    for (std::int64_t i = 0; i < spec.levels(); ++i) {
        projected *= per_level;
        if (projected > cap)
            throw ResourceCapError("construct_inductive: projected tuple count exceeds cap");
    }

    const GeneratorSet gens = generator_set(spec.coins_each(), players);

    DivisionSet current;
    current.players = players;
    current.total = 0;
    current.points.emplace(DivisionPoint(static_cast<std::size_t>(players), 0), 1);

    std::int64_t offset = 1; // base^(level-1)
    for (std::int64_t level = 1; level <= spec.levels(); ++level) {
        std::map<DivisionPoint, std::int64_t> next;
        for (const auto& [point, mult] : current.points) {
            DivisionPoint translated(point.size());
            for (const auto& q : gens.points) {
                for (std::size_t i = 0; i < point.size(); ++i)
                    translated[i] = point[i] + offset * q[i];
                next[translated] += mult;
            }
        }
        current.points = std::move(next);
        if (level < spec.levels())
            offset = checked_mul(offset, spec.base());
    }
    current.total = spec.amount();
    return current;
}

RationalPointSet scale(const DivisionSet& divisions, const GeometricFamilySpec& spec) {
    const std::int64_t denom = spec.scale_power();
    RationalPointSet out;
    out.dim = divisions.players;
    for (const auto& [point, mult] : divisions.points) {
        RationalPoint scaled(point.size());
        for (std::size_t i = 0; i < point.size(); ++i)
            scaled[i] = Rational(point[i], denom);
        out.points.emplace(std::move(scaled), mult);
    }
    return out;
}

RationalPointSet apply_ifs(const IfsSystem& system, const RationalPointSet& set) {
    if (set.points.empty())
        throw std::domain_error("apply_ifs: input set is empty");
    if (system.generators.players != set.dim)
        throw std::domain_error("apply_ifs: dimension mismatch");
    if (system.ratio < 2)
        throw std::domain_error("apply_ifs: ratio must be >= 2 for a contraction");
    RationalPointSet out;
    out.dim = set.dim;
    for (const auto& [point, mult] : set.points) {
        RationalPoint image(point.size());
        for (const auto& q : system.generators.points) {
            for (std::size_t i = 0; i < point.size(); ++i)
                image[i] = point[i].translated(q[i]).scaled_down(system.ratio);
            out.points[image] += mult;
        }
    }
    return out;
}

} // namespace coinfrac
