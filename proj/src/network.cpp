#include "toricity/network.hpp"

#include "toricity/lp.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toricity {

std::size_t ReactionNetwork::species_index(const std::string& name) const {
    auto it = std::find(species.begin(), species.end(), name);
    if (it == species.end()) throw ToricityError(ErrorKind::Parse, "unknown species " + name);
    return static_cast<std::size_t>(it - species.begin());
}

std::string ReactionNetwork::complex_string(std::size_t c) const {
    std::string out;
    const Complex& y = complexes[c];
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (y[i] != 1) out += std::to_string(y[i]);
        out += species[i];
    }
    return out.empty() ? "0" : out;
}

std::string ReactionNetwork::to_string() const {
    std::string out;
    for (const auto& r : reactions) out += complex_string(r.source) + " -> " + complex_string(r.target) + "\n";
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Parsing

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool done() const { return pos >= text.size(); }
    char peek(std::size_t k = 0) const { return pos + k < text.size() ? text[pos + k] : '\0'; }
    void advance(std::size_t k = 1) {
        for (std::size_t i = 0; i < k && pos < text.size(); ++i) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ToricityError(ErrorKind::Parse,
                            "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }
    // Skips blanks and comments, but not statement separators.
    void skip_blanks() {
        while (!done()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (!done() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

using RawComplex = std::vector<std::pair<std::string, long>>;

std::string read_identifier(Cursor& cur) {
    std::string name;
    while (!cur.done() && ident_char(cur.peek())) {
        name += cur.peek();
        cur.advance();
    }
    return name;
}

RawComplex read_complex(Cursor& cur) {
    RawComplex out;
    cur.skip_blanks();
    if (cur.peek() == '0' && !std::isdigit(static_cast<unsigned char>(cur.peek(1))) && !ident_char(cur.peek(1))) {
        cur.advance();
        return out;
    }
    while (true) {
        cur.skip_blanks();
        long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                digits += cur.peek();
                cur.advance();
            }
            if (digits.size() > 9) cur.fail("stoichiometric coefficient too large");
            coeff = std::stol(digits);
            if (coeff == 0) cur.fail("zero stoichiometric coefficient");
            cur.skip_blanks();
        }
        if (!ident_start(cur.peek())) cur.fail("expected a species name");
        out.emplace_back(read_identifier(cur), coeff);
        cur.skip_blanks();
        if (cur.peek() != '+') break;
        cur.advance();
    }
    return out;
}

struct RawReaction {
    RawComplex source, target;
    std::size_t line, col;
};

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
    Cursor cur{text};
    std::vector<std::string> declared;
    bool have_header = false;
    bool seen_reaction = false;
    std::vector<RawReaction> raw;

    while (true) {
        cur.skip_blanks();
        if (cur.done()) break;
        if (cur.peek() == '\n' || cur.peek() == ';') {
            cur.advance();
            continue;
        }
        // species header
        if (cur.text.substr(cur.pos).starts_with("species")) {
            Cursor probe = cur;
            probe.advance(7);
            probe.skip_blanks();
            if (probe.peek() == ':') {
                if (have_header) cur.fail("duplicate species header");
                if (seen_reaction) cur.fail("species header must precede the reactions");
                have_header = true;
                cur = probe;
                cur.advance();
                while (true) {
                    cur.skip_blanks();
                    if (!ident_start(cur.peek())) cur.fail("expected a species name");
                    std::string name = read_identifier(cur);
                    if (std::find(declared.begin(), declared.end(), name) != declared.end())
                        cur.fail("species " + name + " declared twice");
                    declared.push_back(name);
                    cur.skip_blanks();
                    if (cur.peek() == ',') {
                        cur.advance();
                        continue;
                    }
                    break;
                }
                if (!cur.done() && cur.peek() != '\n' && cur.peek() != ';') cur.fail("unexpected character in species header");
                continue;
            }
        }
        seen_reaction = true;
        std::size_t line = cur.line, col = cur.col;
        RawComplex left = read_complex(cur);
        bool any = false;
        while (true) {
            cur.skip_blanks();
            bool reversible;
            if (cur.peek() == '-' && cur.peek(1) == '>') {
                reversible = false;
                cur.advance(2);
            } else if (cur.peek() == '<' && cur.peek(1) == '=' && cur.peek(2) == '>') {
                reversible = true;
                cur.advance(3);
            } else {
                break;
            }
            std::size_t rline = cur.line, rcol = cur.col;
            RawComplex right = read_complex(cur);
            raw.push_back({left, right, line, col});
            if (reversible) raw.push_back({right, left, rline, rcol});
            left = std::move(right);
            line = rline;
            col = rcol;
            any = true;
        }
        if (!any) cur.fail("expected '->' or '<=>'");
        if (!cur.done() && cur.peek() != '\n' && cur.peek() != ';') cur.fail("unexpected character");
    }

    ReactionNetwork net;
    net.species = declared;
    auto index_of = [&](const std::string& name, std::size_t line, std::size_t col) {
        auto it = std::find(net.species.begin(), net.species.end(), name);
        if (it != net.species.end()) return static_cast<std::size_t>(it - net.species.begin());
        if (have_header) {
            throw ToricityError(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                                      ": species " + name + " is not declared in the header");
        }
        net.species.push_back(name);
        return net.species.size() - 1;
    };
    // First pass fixes the species order.
    for (const auto& r : raw) {
        for (const auto& [name, c] : r.source) index_of(name, r.line, r.col);
        for (const auto& [name, c] : r.target) index_of(name, r.line, r.col);
    }
    const std::size_t n = net.species.size();
    std::map<Complex, std::size_t> complex_ids;
    auto complex_id = [&](const RawComplex& rc, std::size_t line, std::size_t col) {
        Complex y(n, 0);
        for (const auto& [name, c] : rc) y[index_of(name, line, col)] += c;
        auto [it, inserted] = complex_ids.emplace(y, net.complexes.size());
        if (inserted) net.complexes.push_back(y);
        return it->second;
    };
    for (const auto& r : raw) {
        std::size_t a = complex_id(r.source, r.line, r.col);
        std::size_t b = complex_id(r.target, r.line, r.col);
        if (a == b) {
            throw ToricityError(ErrorKind::Parse, "line " + std::to_string(r.line) + ", column " +
                                                      std::to_string(r.col) + ": source and target coincide");
        }
        net.reactions.push_back({a, b, "k" + std::to_string(net.reactions.size() + 1)});
    }
    return net;
}

StoichiometricMatrices mass_action_matrices(const ReactionNetwork& net) {
    const std::size_t n = net.species.size(), r = net.reactions.size();
    StoichiometricMatrices out{IntegerMatrix(n, r), IntegerMatrix(n, r)};
    for (std::size_t j = 0; j < r; ++j) {
        const Complex& src = net.complexes[net.reactions[j].source];
        const Complex& tgt = net.complexes[net.reactions[j].target];
        for (std::size_t i = 0; i < n; ++i) {
            out.N(i, j) = tgt[i] - src[i];
            out.M(i, j) = src[i];
        }
    }
    return out;
}

VerticalSystem steady_state_system(const ReactionNetwork& net) {
    auto mats = mass_action_matrices(net);
    if (mats.N.rows() == 0 || mats.N.cols() == 0 || mats.N.is_zero())
        throw ToricityError(ErrorKind::ZeroDynamics, "the stoichiometric matrix is zero");
    RationalMatrix c = row_basis(to_rational(mats.N));
    std::vector<std::string> params;
    for (const auto& r : net.reactions) params.push_back(r.label);
    return VerticalSystem(std::move(c), mats.M, net.species, params);
}

RationalMatrix conservation_laws(const IntegerMatrix& N) { return left_kernel(to_rational(N)); }

// ---------------------------------------------------------------------------
// Intermediates

namespace {

bool is_unit_complex(const Complex& y, std::size_t species) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != (i == species ? 1 : 0)) return false;
    return true;
}

// Species that occur only in the complex consisting of one copy of themselves.
std::optional<std::size_t> unit_complex_of(const ReactionNetwork& net, std::size_t species) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < net.complexes.size(); ++c) {
        if (net.complexes[c][species] == 0) continue;
        if (!is_unit_complex(net.complexes[c], species)) return std::nullopt;
        found = c;
    }
    return found;
}

struct IntermediateGraph {
    std::vector<bool> intermediate;  // per complex
    std::vector<std::vector<std::size_t>> out;  // complex -> targets
    std::vector<std::vector<std::size_t>> in;
};

IntermediateGraph intermediate_graph(const ReactionNetwork& net, const std::vector<std::size_t>& ycomplexes) {
    IntermediateGraph g;
    g.intermediate.assign(net.complexes.size(), false);
    for (auto c : ycomplexes) g.intermediate[c] = true;
    g.out.assign(net.complexes.size(), {});
    g.in.assign(net.complexes.size(), {});
    for (const auto& r : net.reactions) {
        g.out[r.source].push_back(r.target);
        g.in[r.target].push_back(r.source);
    }
    return g;
}

// Complexes reachable from `start` through intermediate complexes only; the
// result holds the non-intermediate endpoints in discovery order.
std::vector<std::size_t> exits_from(const IntermediateGraph& g, std::size_t start,
                                    const std::vector<std::vector<std::size_t>>& adj, std::vector<std::size_t>* visited_ys = nullptr) {
    std::vector<std::size_t> exits;
    std::vector<bool> seen(g.intermediate.size(), false);
    std::deque<std::size_t> queue;
    auto push_from = [&](std::size_t c) {
        for (auto t : adj[c]) {
            if (seen[t]) continue;
            seen[t] = true;
            if (g.intermediate[t]) {
                queue.push_back(t);
                if (visited_ys) visited_ys->push_back(t);
            } else {
                exits.push_back(t);
            }
        }
    };
    push_from(start);
    while (!queue.empty()) {
        auto c = queue.front();
        queue.pop_front();
        push_from(c);
    }
    return exits;
}

std::optional<std::string> check_choice(const ReactionNetwork& net, const std::vector<std::size_t>& ys,
                                        IntermediateChoice& out) {
    const std::size_t n = net.species.size();
    std::vector<std::size_t> ycomplexes;
    std::vector<bool> is_y(n, false);
    for (auto y : ys) {
        if (y >= n) return "species index out of range";
        if (is_y[y]) return "species " + net.species[y] + " listed twice";
        is_y[y] = true;
        auto c = unit_complex_of(net, y);
        if (!c) return "species " + net.species[y] + " occurs in a complex other than " + net.species[y];
        ycomplexes.push_back(*c);
    }
    auto g = intermediate_graph(net, ycomplexes);
    out.intermediates = ys;
    out.non_intermediates.clear();
    for (std::size_t i = 0; i < n; ++i)
        if (!is_y[i]) out.non_intermediates.push_back(i);
    if (out.non_intermediates.empty() && !ys.empty()) return "every species would be an intermediate";
    out.inputs.clear();
    for (std::size_t k = 0; k < ys.size(); ++k) {
        std::size_t yc = ycomplexes[k];
        auto inputs = exits_from(g, yc, g.in);
        auto outputs = exits_from(g, yc, g.out);
        if (inputs.empty() || outputs.empty())
            return "intermediate " + net.species[ys[k]] + " is not on a path between non-intermediate complexes";
        if (inputs.size() != 1) return "intermediate " + net.species[ys[k]] + " has more than one input complex";
        Complex input;
        for (auto i : out.non_intermediates) input.push_back(net.complexes[inputs.front()][i]);
        out.inputs.push_back(std::move(input));
    }
    return std::nullopt;
}

}  // namespace

IntermediateChoice validate_intermediates(const ReactionNetwork& net, const std::vector<std::size_t>& intermediates) {
    std::vector<std::size_t> ys = intermediates;
    std::sort(ys.begin(), ys.end());
    IntermediateChoice out;
    if (auto err = check_choice(net, ys, out)) throw ToricityError(ErrorKind::InvalidChoice, *err);
    return out;
}

IntermediateChoice find_intermediates(const ReactionNetwork& net) {
    std::vector<std::size_t> chosen;
    IntermediateChoice best;
    check_choice(net, chosen, best);
    for (std::size_t i = 0; i < net.species.size(); ++i) {
        if (!unit_complex_of(net, i)) continue;
        auto trial = chosen;
        trial.push_back(i);
        IntermediateChoice candidate;
        if (!check_choice(net, trial, candidate)) {
            chosen = std::move(trial);
            best = std::move(candidate);
        }
    }
    return best;
}

namespace {

// Each connected group of intermediates forms a chain c <-> Y1 <-> ... <-> Yl -> c'.
bool isolated_chains(const ReactionNetwork& net, const IntermediateGraph& g) {
    const std::size_t nc = net.complexes.size();
    std::vector<std::set<std::size_t>> nbr(nc);
    for (const auto& r : net.reactions) {
        if (g.intermediate[r.source] && g.intermediate[r.target]) {
            nbr[r.source].insert(r.target);
            nbr[r.target].insert(r.source);
        }
    }
    std::vector<bool> seen(nc, false);
    auto has_edge = [&](std::size_t a, std::size_t b) {
        return std::find(g.out[a].begin(), g.out[a].end(), b) != g.out[a].end();
    };
    for (std::size_t start = 0; start < nc; ++start) {
        if (!g.intermediate[start] || seen[start]) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (auto t : nbr[c])
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        // the intermediates must form a path
        std::vector<std::size_t> ends;
        for (auto c : comp) {
            if (nbr[c].size() > 2) return false;
            if (nbr[c].size() <= 1) ends.push_back(c);
        }
        if (comp.size() == 1) ends = {comp[0], comp[0]};
        if (ends.size() != 2) return false;
        std::vector<std::size_t> path{ends[0]};
        while (path.size() < comp.size()) {
            std::size_t prev = path.size() >= 2 ? path[path.size() - 2] : nc;
            std::size_t next = nc;
            for (auto t : nbr[path.back()])
                if (t != prev) next = t;
            if (next == nc) return false;
            path.push_back(next);
        }
        // orient so the single input attaches at the front
        std::set<std::size_t> entry_front;
        for (auto s : g.in[path.front()])
            if (!g.intermediate[s]) entry_front.insert(s);
        if (entry_front.empty()) std::reverse(path.begin(), path.end());
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (!has_edge(path[k], path[k + 1])) return false;
        std::size_t input = nc, output = nc;
        for (std::size_t k = 0; k < path.size(); ++k) {
            std::size_t y = path[k];
            for (auto s : g.in[y]) {
                if (g.intermediate[s]) continue;
                if (k != 0 || (input != nc && input != s)) return false;
                input = s;
            }
            for (auto t : g.out[y]) {
                if (g.intermediate[t]) continue;
                bool back_to_input = (k == 0 && t == input);
                if (back_to_input) continue;
                if (k + 1 != path.size() || output != nc) return false;
                output = t;
            }
        }
        if (input == nc || output == nc || output == input) return false;
        if (has_edge(output, path.back())) return false;
    }
    return true;
}

}  // namespace

ReducedNetwork reduce_network(const ReactionNetwork& net, const IntermediateChoice& choice_in) {
    IntermediateChoice choice = validate_intermediates(net, choice_in.intermediates);
    std::vector<std::size_t> ycomplexes;
    for (auto y : choice.intermediates) ycomplexes.push_back(*unit_complex_of(net, y));
    auto g = intermediate_graph(net, ycomplexes);

    ReducedNetwork out;
    out.choice = choice;
    ReactionNetwork& red = out.network;
    for (auto i : choice.non_intermediates) red.species.push_back(net.species[i]);
    std::map<Complex, std::size_t> ids;
    auto project = [&](std::size_t c) {
        Complex y;
        for (auto i : choice.non_intermediates) y.push_back(net.complexes[c][i]);
        auto [it, inserted] = ids.emplace(y, red.complexes.size());
        if (inserted) red.complexes.push_back(y);
        return it->second;
    };
    std::set<std::pair<std::size_t, std::size_t>> present;  // original complex ids
    for (const auto& r : net.reactions)
        if (!g.intermediate[r.source] && !g.intermediate[r.target]) present.emplace(r.source, r.target);

    std::set<std::size_t> expanded;
    for (const auto& r : net.reactions) {
        bool si = g.intermediate[r.source], ti = g.intermediate[r.target];
        if (!si && !ti) {
            red.reactions.push_back({project(r.source), project(r.target), r.label});
            continue;
        }
        if (si || expanded.count(r.source)) continue;
        expanded.insert(r.source);
        for (auto t : exits_from(g, r.source, g.out)) {
            if (t == r.source || present.count({r.source, t})) continue;
            present.emplace(r.source, t);
            red.reactions.push_back({project(r.source), project(t), ""});
        }
    }
    for (std::size_t j = 0, fresh = 0; j < red.reactions.size(); ++j)
        if (red.reactions[j].label.empty()) red.reactions[j].label = "kr" + std::to_string(++fresh);

    out.B = IntegerMatrix(choice.non_intermediates.size(), choice.intermediates.size());
    for (std::size_t k = 0; k < choice.inputs.size(); ++k)
        for (std::size_t i = 0; i < choice.inputs[k].size(); ++i) out.B(i, k) = choice.inputs[k][i];
    out.surjective = isolated_chains(net, g) ? Tri::Yes : Tri::Unknown;
    return out;
}

IntegerMatrix lift_invariance(const IntegerMatrix& a_tilde, const IntegerMatrix& B) {
    if (a_tilde.cols() != B.rows())
        throw ToricityError(ErrorKind::DimensionMismatch, "lift: A has " + std::to_string(a_tilde.cols()) +
                                                              " columns but B has " + std::to_string(B.rows()) + " rows");
    if (a_tilde.rows() == 0) return IntegerMatrix(0, a_tilde.cols() + B.cols());
    return a_tilde.hstack(a_tilde * B);
}

IntegerMatrix lift_to_species_order(const IntegerMatrix& a_tilde, const ReducedNetwork& reduced) {
    IntegerMatrix lifted = lift_invariance(a_tilde, reduced.B);
    const auto& ch = reduced.choice;
    const std::size_t n = ch.non_intermediates.size() + ch.intermediates.size();
    IntegerMatrix out(lifted.rows(), n);
    for (std::size_t r = 0; r < lifted.rows(); ++r) {
        for (std::size_t k = 0; k < ch.non_intermediates.size(); ++k) out(r, ch.non_intermediates[k]) = lifted(r, k);
        for (std::size_t k = 0; k < ch.intermediates.size(); ++k)
            out(r, ch.intermediates[k]) = lifted(r, ch.non_intermediates.size() + k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multistationarity and ACR

const char* to_string(Multistationarity v) {
    switch (v) {
        case Multistationarity::Multistationary: return "Multistationary";
        case Multistationarity::Monostationary: return "Monostationary";
        case Multistationarity::Inconclusive: return "Inconclusive";
    }
    return "?";
}

MultistationarityResult multistationarity_test(const IntegerMatrix& A, const RationalMatrix& L, bool toric) {
    MultistationarityResult out;
    const std::size_t n = A.cols();
    if (L.rows() == 0) {
        out.note = "no conservation laws";
        return out;
    }
    if (L.cols() != n) throw ToricityError(ErrorKind::DimensionMismatch, "conservation laws and A disagree on n");
    RationalMatrix B;
    if (A.rows() == 0) {
        B = RationalMatrix::identity(n);
    } else {
        auto basis = kernel_circuit_basis(to_rational(A));
        B = RationalMatrix(n, basis.vectors.size());
        for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
            auto v = primitive_integer_vector(basis.vectors[k]);
            for (std::size_t i = 0; i < n; ++i) B(i, k) = v[i];
        }
    }
    if (B.cols() + L.rows() != n) {
        out.note = "Gamma is not square (" + std::to_string(B.cols() + L.rows()) + "x" + std::to_string(n) + ")";
        return out;
    }
    auto alpha = numbered_names("alpha", n);
    PolynomialMatrix gamma(n, n, SparsePolynomial(alpha));
    for (std::size_t k = 0; k < B.cols(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (B(i, k) != 0) {
                Exponent e(n, 0);
                e[i] = 1;
                gamma(k, i) = SparsePolynomial::monomial(alpha, e, B(i, k));
            }
    for (std::size_t r = 0; r < L.rows(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            if (L(r, i) != 0) gamma(B.cols() + r, i) = SparsePolynomial::constant(alpha, L(r, i));
    out.determinant = det_symbolic(gamma, alpha);
    out.sign = sign_classify(*out.determinant);
    switch (out.sign) {
        case SignVerdict::MixedSigns:
        case SignVerdict::ZeroPolynomial:
            out.outcome = Multistationarity::Multistationary;
            break;
        default:
            if (toric) {
                out.outcome = Multistationarity::Monostationary;
            } else {
                out.note = "determinant has constant sign but toricity is not established";
            }
    }
    return out;
}

const char* to_string(AcrFlag v) {
    switch (v) {
        case AcrFlag::ACR: return "ACR";
        case AcrFlag::LocalACR: return "LocalACR";
        case AcrFlag::NoACR: return "NoACR";
        case AcrFlag::Undetermined: return "Undetermined";
    }
    return "?";
}

std::vector<AcrFlag> acr_detect(const IntegerMatrix& A, Verdict level) {
    std::vector<AcrFlag> out(A.cols(), AcrFlag::Undetermined);
    for (std::size_t i = 0; i < A.cols(); ++i) {
        bool zero = true;
        for (std::size_t r = 0; r < A.rows(); ++r)
            if (A(r, i) != 0) zero = false;
        if (!zero) {
            out[i] = AcrFlag::NoACR;
        } else if (level == Verdict::Toric) {
            out[i] = AcrFlag::ACR;
        } else if (level == Verdict::LocallyToric) {
            out[i] = AcrFlag::LocalACR;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure

NetworkStructure network_structure(const ReactionNetwork& net) {
    NetworkStructure out;
    const std::size_t nc = net.complexes.size();
    out.complexes = nc;
    std::vector<std::size_t> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& r : net.reactions) parent[find(r.source)] = find(r.target);
    std::map<std::size_t, std::size_t> class_of_root;
    for (std::size_t c = 0; c < nc; ++c) class_of_root.emplace(find(c), class_of_root.size());
    out.linkage_classes = class_of_root.size();
    out.classes.assign(out.linkage_classes, {});
    std::vector<std::size_t> reaction_class(net.reactions.size());
    for (std::size_t j = 0; j < net.reactions.size(); ++j) {
        reaction_class[j] = class_of_root[find(net.reactions[j].source)];
        out.classes[reaction_class[j]].push_back(j);
    }
    auto mats = mass_action_matrices(net);
    out.rank = rank(to_rational(mats.N));
    out.deficiency = static_cast<long>(nc) - static_cast<long>(out.rank) - static_cast<long>(out.linkage_classes);

    // weakly reversible: every reaction lies on a directed cycle
    std::vector<std::vector<std::size_t>> adj(nc);
    for (const auto& r : net.reactions) adj[r.source].push_back(r.target);
    out.weakly_reversible = true;
    for (const auto& r : net.reactions) {
        std::vector<bool> seen(nc, false);
        std::vector<std::size_t> stack{r.target};
        seen[r.target] = true;
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            for (auto t : adj[c])
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
        }
        if (!seen[r.source]) {
            out.weakly_reversible = false;
            break;
        }
    }
    out.deficiency_zero_certificate = out.weakly_reversible && out.deficiency == 0;
    if (!mats.N.is_zero()) {
        auto part = matroid_partition(steady_state_system(net));
        out.matroid_refines_linkage = true;
        for (const auto& block : part.blocks)
            for (auto j : block)
                if (reaction_class[j] != reaction_class[block.front()]) out.matroid_refines_linkage = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Siphons

std::vector<std::vector<std::size_t>> minimal_siphons(const ReactionNetwork& net, std::size_t budget) {
    const std::size_t n = net.species.size();
    std::set<std::vector<bool>> visited;
    std::set<std::vector<std::size_t>> found;
    std::size_t states = 0;

    // A siphon Z: every reaction producing a species of Z consumes one.
    auto violated = [&](const std::vector<bool>& z) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < net.reactions.size(); ++j) {
            const Complex& src = net.complexes[net.reactions[j].source];
            const Complex& tgt = net.complexes[net.reactions[j].target];
            bool produces = false, consumes = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!z[i]) continue;
                if (tgt[i] > 0) produces = true;
                if (src[i] > 0) consumes = true;
            }
            if (produces && !consumes) return j;
        }
        return std::nullopt;
    };
    std::vector<std::vector<bool>> stack;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<bool> z(n, false);
        z[s] = true;
        stack.push_back(z);
    }
    while (!stack.empty()) {
        auto z = std::move(stack.back());
        stack.pop_back();
        if (!visited.insert(z).second) continue;
        if (++states > budget)
            throw ToricityError(ErrorKind::SearchBudgetExceeded, "siphon search exceeded " + std::to_string(budget) + " states");
        auto j = violated(z);
        if (!j) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i)
                if (z[i]) members.push_back(i);
            found.insert(members);
            continue;
        }
        const Complex& src = net.complexes[net.reactions[*j].source];
        for (std::size_t i = 0; i < n; ++i) {
            if (src[i] == 0 || z[i]) continue;
            auto next = z;
            next[i] = true;
            stack.push_back(std::move(next));
        }
    }
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : found) {
        bool minimal = true;
        for (const auto& t : found) {
            if (t.size() >= s.size()) continue;
            if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

// Is there a nonzero a = yA >= 0 supported inside z?
bool row_space_covers(const IntegerMatrix& A, const std::vector<std::size_t>& z) {
    const std::size_t d = A.rows(), n = A.cols();
    if (d == 0) return false;
    std::vector<bool> in_z(n, false);
    for (auto i : z) in_z[i] = true;
    const std::size_t vars = 2 * d + z.size();
    RationalMatrix eq(n + 1, vars);
    RationalVector rhs(n + 1, 0);
    std::size_t slack = 2 * d;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            eq(i, k) = A(k, i);
            eq(i, d + k) = -Rational(A(k, i));
        }
        if (in_z[i]) {
            eq(i, slack) = -1;
            eq(n, slack) = 1;
            ++slack;
        }
    }
    rhs[n] = 1;
    RationalVector cost(vars, 0);
    return solve_lp(eq, rhs, cost).status != LpStatus::Infeasible;
}

}  // namespace

Tri siphon_boundary_check(const ReactionNetwork& net, const IntegerMatrix& A) {
    std::vector<std::vector<std::size_t>> siphons;
    try {
        siphons = minimal_siphons(net);
    } catch (const ToricityError& e) {
        if (e.kind() == ErrorKind::SearchBudgetExceeded) return Tri::Unknown;
        throw;
    }
    for (const auto& z : siphons)
        if (!row_space_covers(A, z)) return Tri::Unknown;
    return Tri::Yes;
}

// ---------------------------------------------------------------------------

NetworkAnalysis analyze_network(const ReactionNetwork& net, const NetworkOptions& options) {
    NetworkAnalysis out;
    out.network = net;
    out.matrices = mass_action_matrices(net);
    if (options.structure) out.structure = network_structure(net);

    const ReactionNetwork* target = &net;
    if (options.reduce) {
        auto choice = find_intermediates(net);
        if (!choice.intermediates.empty()) {
            out.reduced = reduce_network(net, choice);
            target = &out.reduced->network;
            std::string names;
            for (auto y : choice.intermediates) names += (names.empty() ? "" : ", ") + net.species[y];
            out.notices.push_back("reduced by intermediates " + names);
        }
    }
    VerticalSystem sys = steady_state_system(*target);
    AnalyzeOptions aopts = options.analyze;
    if (options.mode == GroupMode::Positive && positive_locus_nonempty(sys, options.mode)) {
        auto inv = invariance_group(sys, options.mode);
        out.siphon = siphon_boundary_check(*target, inv.A);
        if (aopts.boundary == Tri::Unknown) aopts.boundary = out.siphon;
    }
    out.report = analyze(sys, options.mode, options.seed, aopts);
    out.verdict = out.report.verdict;
    if (out.report.invariance) {
        out.A = out.reduced ? lift_to_species_order(out.report.invariance->A, *out.reduced) : out.report.invariance->A;
    }
    if (out.reduced && out.reduced->surjective != Tri::Yes &&
        (out.verdict == Verdict::NotLocallyToric || out.verdict == Verdict::InvariantOnly)) {
        out.notices.push_back("negative conclusions transfer from the reduced network only when the reduction is "
                              "surjective, which is conjectural for this network");
    }
    if (options.multistationarity) {
        if (out.A) {
            out.multistationarity =
                multistationarity_test(*out.A, conservation_laws(out.matrices.N), out.verdict == Verdict::Toric);
        } else {
            out.multistationarity = MultistationarityResult{};
            out.multistationarity->note = "no invariance group";
        }
    }
    if (options.acr && out.A) out.acr = acr_detect(*out.A, out.verdict);
    return out;
}

}  // namespace toricity
