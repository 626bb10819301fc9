#pragma once

#include "toricity/matrix.hpp"

namespace toricity {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector x;
};

/// Exact two-phase simplex with Bland's rule:
/// maximize c.x subject to A x = b, x >= 0.
LpResult solve_lp(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> c);

}  // namespace toricity
