#pragma once

#include "toricity/exactalg.hpp"
#include "toricity/polyhedra.hpp"
#include "toricity/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricity {

enum class GroupMode { Positive, RealStar, ComplexStar };

const char* to_string(GroupMode mode);
/// Accepts "positive", "real-star", "complex-star".
GroupMode parse_group_mode(const std::string& text);

/// F = C (kappa ∘ x^M). A rank-deficient C is replaced by the nonzero rows of
/// its reduced row echelon form, which keeps ker(C).
class VerticalSystem {
public:
    VerticalSystem(RationalMatrix c, IntegerMatrix m, std::vector<std::string> variables = {},
                   std::vector<std::string> parameters = {});

    const RationalMatrix& C() const noexcept { return c_; }
    /// C exactly as supplied, before any row reduction.
    const RationalMatrix& input_C() const noexcept { return input_c_; }
    const IntegerMatrix& M() const noexcept { return m_; }
    std::size_t s() const noexcept { return c_.rows(); }
    std::size_t m() const noexcept { return c_.cols(); }
    std::size_t n() const noexcept { return m_.rows(); }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::vector<std::string>& parameters() const noexcept { return params_; }
    /// True when the input C had dependent rows and was replaced.
    bool row_reduced() const noexcept { return row_reduced_; }

    /// Rows of F_kappa as polynomials in x, each multiplied by the monomial
    /// that clears negative exponents (harmless on the positive orthant).
    std::vector<SparsePolynomial> polynomials(std::span<const Rational> kappa) const;

    /// Symbolic F with parameters as variables (parameters first, then x).
    std::vector<SparsePolynomial> symbolic_polynomials() const;

private:
    RationalMatrix c_;
    RationalMatrix input_c_;
    IntegerMatrix m_;
    std::vector<std::string> vars_;
    std::vector<std::string> params_;
    bool row_reduced_ = false;
};

struct MatroidPartition {
    std::vector<std::vector<std::size_t>> blocks;  // sorted, ordered by smallest element
};

/// Blocks of [m] obtained by merging overlapping fundamental-circuit supports
/// of ker(C). Columns outside every circuit form singleton blocks.
MatroidPartition matroid_partition(const VerticalSystem& sys);

bool positive_locus_nonempty(const VerticalSystem& sys, GroupMode mode);

struct InvarianceResult {
    IntegerMatrix A;  // d x n, Hermite normal form
    std::size_t d = 0;
    GroupMode mode = GroupMode::Positive;
    MatroidPartition partition;
};

/// A = first n columns of a lattice basis of ker(Mhat^T), where Mhat stacks M
/// over one indicator row per partition block. Throws EmptyLocus when the
/// zero set is empty for every kappa.
InvarianceResult invariance_group(const VerticalSystem& sys, GroupMode mode);

/// Same construction with the blocks induced by the row supports of C; the
/// resulting lattice consists of quasihomogeneity weights.
IntegerMatrix quasihomogeneity_weights(const VerticalSystem& sys);

enum class Nondegeneracy { Yes, No, Undetermined };
const char* to_string(Nondegeneracy v);

struct NondegeneracyResult {
    Nondegeneracy status = Nondegeneracy::Undetermined;
    RationalVector witness;  // kernel vector w with rank(C diag(w) M^T) = s
    std::string method;
};

/// The symbolic matrix C diag(w) M^T with w = sum_k lambda_k K_k, where K_k
/// are the given generators of ker(C).
PolynomialMatrix jacobian_pattern(const VerticalSystem& sys, const std::vector<RationalVector>& generators,
                                  const std::vector<std::string>& lambda_names);

NondegeneracyResult nondegeneracy(const VerticalSystem& sys, std::uint64_t seed);

enum class AllPositive { Yes, Unknown };
const char* to_string(AllPositive v);

struct AllPositiveResult {
    AllPositive status = AllPositive::Unknown;
    ConeRays rays;
    std::vector<std::size_t> columns;  // columns of the certifying minor
    SparsePolynomial minor;
};

/// Sufficient test for rank(C diag(w) M^T) = s on all of ker(C) ∩ R^m_{>0}:
/// some s x s minor, written in the extreme-ray coordinates, is a nonzero
/// polynomial with coefficients of one sign.
AllPositiveResult nondegeneracy_all_positive(const VerticalSystem& sys);

enum class LocalToricity { NotLocallyToric, GenericallyLocallyToric, LocallyToric, Undetermined };
const char* to_string(LocalToricity v);

LocalToricity local_toricity(const VerticalSystem& sys, const InvarianceResult& inv, Nondegeneracy nd,
                             std::optional<AllPositive> all_positive = std::nullopt);

enum class InjectivityOutcome { Toric, Inconclusive };
const char* to_string(InjectivityOutcome v);

struct InjectivityResult {
    InjectivityOutcome outcome = InjectivityOutcome::Inconclusive;
    SignVerdict sign = SignVerdict::ZeroPolynomial;
    std::optional<SparsePolynomial> determinant;
    std::string reason;
};

/// det [C diag(mu) M^T diag(alpha); A] in variables mu1..mum, alpha1..alphan.
InjectivityResult injectivity_test(const VerticalSystem& sys, const InvarianceResult& inv);

struct CosetCountingSystem {
    VerticalSystem base;
    IntegerMatrix A;
    RationalVector kappa;
    RationalVector b;  // A p
    RationalVector p;  // strictly positive witness

    std::vector<SparsePolynomial> polynomials() const { return base.polynomials(kappa); }
    /// A x - b as polynomials in x.
    std::vector<SparsePolynomial> linear_equations() const;
};

/// b = A p for a random positive p (entries in [1/8, 8], fixed by seed).
CosetCountingSystem coset_counting_system(const VerticalSystem& sys, const InvarianceResult& inv,
                                          std::span<const Rational> kappa, std::uint64_t seed);
CosetCountingSystem coset_counting_system_at(const VerticalSystem& sys, const InvarianceResult& inv,
                                             std::span<const Rational> kappa, std::span<const Rational> p);

enum class CountKind { Exact, Heuristic, Exported, Inconclusive };
const char* to_string(CountKind v);

struct CountOptions {
    std::optional<std::string> export_path;
    std::size_t starts = 200;
    std::uint64_t seed = 0;
};

struct CountResult {
    CountKind kind = CountKind::Inconclusive;
    std::size_t count = 0;
    std::string detail;
    std::vector<std::vector<double>> solutions;  // heuristic path only
};

/// s = 1: exact Sturm count on the positive segment of the line {Ax = b}.
/// s >= 2: multistart damped Newton in log coordinates, or export.
CountResult count_positive_cosets(const CosetCountingSystem& h, const CountOptions& options = {});

/// Writes the exchange format read by external solvers.
std::string exchange_format(const CosetCountingSystem& h);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri v);

struct ConstantCosetConditions {
    Tri boundary = Tri::Unknown;       // (i) no boundary zeros on the slice
    Tri nondegenerate = Tri::Unknown;  // (ii) augmented rank for all positive w, h
    Tri compact = Tri::Unknown;        // (iii) row(A) meets the positive orthant
    std::optional<SparsePolynomial> determinant;
    std::string note;

    bool all_yes() const { return boundary == Tri::Yes && nondegenerate == Tri::Yes && compact == Tri::Yes; }
};

ConstantCosetConditions constant_coset_conditions(const VerticalSystem& sys, const InvarianceResult& inv,
                                                  Tri boundary);

/// True when every row of rref(C) has support of size at most 2, with
/// opposite signs on size-2 rows.
bool binomial_quickcheck(const VerticalSystem& sys);

/// Freely parametrized system: one block row per support. A coefficient of
/// 0 stands for a free sign and produces two columns (+1 and -1) sharing the
/// monomial. Missing coefficients default to 1.
VerticalSystem build_free_system(const std::vector<std::vector<LatticePoint>>& supports,
                                 const std::vector<std::vector<Rational>>& coefficients = {});

/// Supports of the coset counting system rows, for Bernstein bounds.
std::vector<SupportSet> coset_supports(const VerticalSystem& sys, const IntegerMatrix& A);

enum class Verdict {
    EmptyPositiveLocus,
    InvariantOnly,
    NotLocallyToric,
    GenericallyLocallyToric,
    GenericallyToric,
    LocallyToric,
    Toric,
};
const char* to_string(Verdict v);

struct Evidence {
    std::string test;
    std::string inputs_hash;
    std::string outcome;
};

struct AnalyzeOptions {
    /// Assertion for condition (i) of the constant-coset criterion, e.g. from
    /// the siphon check on a network.
    Tri boundary = Tri::Unknown;
    std::optional<RationalVector> kappa;  // counting point; random if absent
    std::optional<std::string> export_path;
    std::size_t max_mixed_volume_dim = 8;
};

struct ToricityReport {
    GroupMode mode = GroupMode::Positive;
    std::uint64_t seed = 0;
    std::size_t s = 0, m = 0, n = 0;

    bool positive_locus = false;
    std::optional<InvarianceResult> invariance;
    std::optional<IntegerMatrix> quasihomogeneity;
    bool binomial = false;
    std::optional<NondegeneracyResult> nondegeneracy;
    std::optional<AllPositiveResult> all_positive;
    std::optional<InjectivityResult> injectivity;
    std::optional<Integer> mixed_volume;
    std::optional<ConstantCosetConditions> constant_cosets;
    std::optional<CountResult> count;
    std::optional<RationalVector> count_kappa;

    Verdict verdict = Verdict::InvariantOnly;
    /// Exact coset count for LocallyToric(count); otherwise unset.
    std::optional<std::size_t> coset_count;
    /// mixed-volume bound for GenericallyLocallyToric / LocallyToric(bound)
    std::optional<Integer> coset_bound;
    bool all_kappa = false;  // Z_{>0} = R^m_{>0} established

    std::vector<Evidence> evidence;
    std::vector<std::string> notices;
};

ToricityReport analyze(const VerticalSystem& sys, GroupMode mode, std::uint64_t seed,
                       const AnalyzeOptions& options = {});

/// Default seed, overridable by TORICITY_SEED.
std::uint64_t default_seed();

}  // namespace toricity
