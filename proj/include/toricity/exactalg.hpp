#pragma once

#include "toricity/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toricity {

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows stay at the bottom. Pivot search
/// takes the lowest row index with a nonzero entry, so results are stable.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Nonzero rows of rref(m): a canonical basis of the row space.
RationalMatrix row_basis(const RationalMatrix& m);

/// Kernel basis made of fundamental circuits: one vector per free column f
/// of rref(m), with v_f = 1 and v_p = -R[i][f] on the pivot columns.
struct CircuitBasis {
    std::vector<RationalVector> vectors;
    std::vector<std::vector<std::size_t>> supports;
};

CircuitBasis kernel_circuit_basis(const RationalMatrix& m);

/// Kernel basis as the columns of an (cols x k) matrix.
RationalMatrix kernel_matrix(const RationalMatrix& m);

/// Basis of the left kernel {y : y m = 0}, as rows, in reduced row echelon form.
RationalMatrix left_kernel(const RationalMatrix& m);

enum class LatticeMode { RationalSaturated, IntegerLattice };

/// Rows y with y m = 0 (equivalently m^T y^T = 0) forming a lattice basis,
/// returned in Hermite normal form. In RationalSaturated mode the rational
/// kernel is cleared to primitive vectors and then saturated; in
/// IntegerLattice mode the Z-kernel is taken directly by unimodular row
/// operations.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& m, LatticeMode mode);

/// Rows y in Z^rows(x) with y x = 0: a Z-basis of the integer left kernel.
IntegerMatrix left_integer_kernel(const IntegerMatrix& x);

/// Row-style Hermite normal form with zero rows removed: pivots positive,
/// entries above a pivot reduced into [0, pivot).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
IntegerVector smith_invariants(const IntegerMatrix& m);

bool same_row_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

/// True when every row of `sub` lies in the Z-row lattice of `lattice`.
bool row_lattice_contains(const IntegerMatrix& lattice, const IntegerMatrix& sub);

/// Deterministic random kernel vector: coefficients uniform in [-2^16, 2^16]
/// on the circuit basis. Throws TrivialKernel when ker(m) = 0.
RationalVector random_kernel_vector(const RationalMatrix& m, std::uint64_t seed);

/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> b);

/// Exact determinant of a square rational matrix.
Rational determinant(const RationalMatrix& m);

}  // namespace toricity
