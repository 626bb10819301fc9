#pragma once

#include "toricity/toricity.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace toricity {

using Complex = std::vector<long>;  // coefficients over the species list

struct Reaction {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

struct ReactionNetwork {
    std::vector<std::string> species;
    std::vector<Complex> complexes;
    std::vector<Reaction> reactions;

    std::size_t species_index(const std::string& name) const;
    std::string complex_string(std::size_t c) const;
    /// One reaction per line, "A + B -> C".
    std::string to_string() const;
};

/// Statements are separated by newlines or ';'. Each statement is a chain
/// `complex (->|<=>) complex ...`; `#` starts a comment; an optional
/// `species: A, B, C` statement fixes the species order. Errors carry
/// line and column.
ReactionNetwork parse_network(std::string_view text);

struct StoichiometricMatrices {
    IntegerMatrix N;  // target - source
    IntegerMatrix M;  // source complexes
};

StoichiometricMatrices mass_action_matrices(const ReactionNetwork& net);

/// C = nonzero rows of rref(N), M = reactant matrix. Throws ZeroDynamics when N = 0.
VerticalSystem steady_state_system(const ReactionNetwork& net);

/// Left-kernel basis of N in reduced row echelon form.
RationalMatrix conservation_laws(const IntegerMatrix& N);

struct IntermediateChoice {
    std::vector<std::size_t> intermediates;      // species indices
    std::vector<std::size_t> non_intermediates;  // species indices, original order
    std::vector<Complex> inputs;                 // per intermediate, over the non-intermediates
};

/// One maximal valid set of single-input intermediates, chosen greedily in
/// species order.
IntermediateChoice find_intermediates(const ReactionNetwork& net);

/// Checks conditions (i), (ii) and single input; throws InvalidChoice.
IntermediateChoice validate_intermediates(const ReactionNetwork& net, const std::vector<std::size_t>& intermediates);

struct ReducedNetwork {
    ReactionNetwork network;
    IntegerMatrix B;  // non-intermediates x intermediates
    Tri surjective = Tri::Unknown;  // Yes for isolated chain motifs, Unknown (conjectural) otherwise
    IntermediateChoice choice;
};

ReducedNetwork reduce_network(const ReactionNetwork& net, const IntermediateChoice& choice);

/// [Atilde | Atilde B].
IntegerMatrix lift_invariance(const IntegerMatrix& a_tilde, const IntegerMatrix& B);

/// lift_invariance with columns put back in the original species order.
IntegerMatrix lift_to_species_order(const IntegerMatrix& a_tilde, const ReducedNetwork& reduced);

enum class Multistationarity { Multistationary, Monostationary, Inconclusive };
const char* to_string(Multistationarity v);

struct MultistationarityResult {
    Multistationarity outcome = Multistationarity::Inconclusive;
    std::optional<SparsePolynomial> determinant;
    SignVerdict sign = SignVerdict::ZeroPolynomial;
    std::string note;
};

/// Square-determinant criterion on Gamma = [B^T diag(alpha); L], where the
/// columns of B span ker(A). `toric` says whether T_A-toricity is known.
MultistationarityResult multistationarity_test(const IntegerMatrix& A, const RationalMatrix& L, bool toric);

enum class AcrFlag { ACR, LocalACR, NoACR, Undetermined };
const char* to_string(AcrFlag v);

std::vector<AcrFlag> acr_detect(const IntegerMatrix& A, Verdict level);

struct NetworkStructure {
    std::size_t complexes = 0;
    std::size_t linkage_classes = 0;
    std::size_t rank = 0;
    long deficiency = 0;
    bool weakly_reversible = false;
    std::vector<std::vector<std::size_t>> classes;  // reaction indices per linkage class
    bool matroid_refines_linkage = false;
    bool deficiency_zero_certificate = false;  // weakly reversible with deficiency 0
};

NetworkStructure network_structure(const ReactionNetwork& net);

/// Yes when every minimal siphon contains the support of a nonzero
/// nonnegative vector in row(A). Siphon search is capped at 2^20 states.
Tri siphon_boundary_check(const ReactionNetwork& net, const IntegerMatrix& A);

std::vector<std::vector<std::size_t>> minimal_siphons(const ReactionNetwork& net, std::size_t budget = std::size_t{1} << 20);

struct NetworkOptions {
    GroupMode mode = GroupMode::Positive;
    std::uint64_t seed = 1;
    bool reduce = true;
    bool multistationarity = false;
    bool acr = false;
    bool structure = false;
    AnalyzeOptions analyze;
};

struct NetworkAnalysis {
    ReactionNetwork network;
    StoichiometricMatrices matrices;
    std::optional<ReducedNetwork> reduced;
    Tri siphon = Tri::Unknown;
    ToricityReport report;  // for the reduced network when a reduction was applied
    std::optional<IntegerMatrix> A;  // over the original species
    Verdict verdict = Verdict::InvariantOnly;
    std::optional<MultistationarityResult> multistationarity;
    std::vector<AcrFlag> acr;
    std::optional<NetworkStructure> structure;
    std::vector<std::string> notices;
};

/// Runs the toricity analysis on the network, on its reduction by a maximal
/// set of intermediates when one exists and `reduce` is set.
NetworkAnalysis analyze_network(const ReactionNetwork& net, const NetworkOptions& options = {});

}  // namespace toricity
