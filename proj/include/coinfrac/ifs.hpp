#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coinfrac/coin_set.hpp"
#include "coinfrac/division.hpp"
#include "coinfrac/enumerate.hpp"
#include "coinfrac/rational.hpp"

namespace coinfrac {

/// The translate offsets of one recursion step: all non-negative integer
/// player vectors summing to `degree`, in descending lexicographic order.
struct GeneratorSet {
    int players = 1;
    std::int64_t degree = 0;
    std::vector<DivisionPoint> points;

    std::size_t size() const { return points.size(); }
    bool operator==(const GeneratorSet&) const = default;
};

GeneratorSet generator_set(std::int64_t degree, int players);

/// A point with exact rational coordinates. Denominators stay powers of
/// the construction's contraction base.
using RationalPoint = std::vector<Rational>;

/// Finite multiset of rational points (point -> multiplicity).
struct RationalPointSet {
    int dim = 0;
    std::map<RationalPoint, std::int64_t> points;

    std::size_t size() const { return points.size(); }
    bool operator==(const RationalPointSet&) const = default;
};

/// A finite family of contraction maps x -> (x + q) / ratio, one per
/// generator point q.
struct IfsSystem {
    std::int64_t ratio = 2; ///< inverse contraction factor, >= 2
    GeneratorSet generators;
};

/// The IFS whose iterates build the scaled division sets of a family.
IfsSystem make_ifs(const GeometricFamilySpec& spec, int players);

/// Builds the division set of a geometric family by the inductive
/// recursion: start from the one-point set at the origin and apply m
/// rounds of translate-and-union over the generator set, accumulating
/// multiplicities where translated copies overlap.
/// Throws ResourceCapError when |generators|^m exceeds `cap`.
DivisionSet construct_inductive(const GeometricFamilySpec& spec, int players,
                                std::int64_t cap = kDefaultTupleCap);

/// Divides every coordinate exactly by base^levels; multiplicities are
/// preserved.
RationalPointSet scale(const DivisionSet& divisions, const GeometricFamilySpec& spec);

/// One application of the induced set map: union over all generators q of
/// (K + q) / ratio, summing multiplicities on coincidence.
RationalPointSet apply_ifs(const IfsSystem& system, const RationalPointSet& set);

} // namespace coinfrac
