#pragma once

#include "toricity/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace toricity {

/// Strictly positive vector in ker(m), scaled to a primitive integer vector,
/// or nullopt when ker(m) ∩ R^n_{>0} is empty. Decided by the LP
/// max t s.t. m w = 0, w_i >= t, t <= 1.
std::optional<IntegerVector> strictly_positive_kernel(const RationalMatrix& m);

struct ConeRays {
    std::vector<IntegerVector> rays;  // primitive, sorted lexicographically
    std::size_t ambient_dim = 0;
};

/// Extreme rays of ker(m) ∩ R^cols_{>=0} by double description, started
/// from the simplicial cone cut out by the free columns of rref(m).
ConeRays extreme_rays(const RationalMatrix& m);

/// Whether the row space of `a` meets the open positive orthant.
bool positive_row_space(const IntegerMatrix& a);

using LatticePoint = std::vector<std::int64_t>;

struct SupportSet {
    std::vector<LatticePoint> points;

    SupportSet() = default;
    explicit SupportSet(std::vector<LatticePoint> pts);
    std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

/// Euclidean volume of conv(s), 0 when the hull is not full-dimensional.
Rational polytope_volume(const SupportSet& s);

/// Vertices of conv(s) in input order, each tested by LP membership in the
/// hull of the remaining points.
SupportSet convex_hull_vertices(const SupportSet& s);

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b);

/// Normalized mixed volume sum_{S} (-1)^{n-|S|} vol(sum_{i in S} P_i), which
/// is the Bernstein root count (two generic lines give 1).
Integer mixed_volume(std::span<const SupportSet> supports);

}  // namespace toricity
