// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include "property_suites.hpp"

#include "toricity/io.hpp"
#include "toricity/network.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sys/wait.h>
#include <unistd.h>

using namespace toricity;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

IntegerMatrix Z(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return IntegerMatrix::from_rows(out);
}

RationalVector vec(std::initializer_list<const char*> xs) {
    RationalVector out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

ReactionNetwork load_network(const std::string& name) { return parse_network(read_file(fs::path(MODELS_DIR) / name)); }
MatrixInput load_matrix(const std::string& name) { return parse_matrix_json(read_file(fs::path(MODELS_DIR) / name)); }

NetworkOptions full_options() {
    NetworkOptions o;
    o.multistationarity = true;
    o.acr = true;
    o.structure = true;
    return o;
}

bool same_up_to_sign(const SparsePolynomial& a, const SparsePolynomial& b) { return a == b || a == -b; }

SparsePolynomial product_sum(const std::vector<std::string>& vars,
                             const std::vector<std::pair<long, std::vector<std::string>>>& terms) {
    SparsePolynomial out(vars);
    for (const auto& [coef, names] : terms) {
        auto t = SparsePolynomial::constant(vars, Rational(coef));
        for (const auto& n : names) t *= SparsePolynomial::variable(vars, n);
        out += t;
    }
    return out;
}

void idh_end_to_end(Check& c) {
    auto net = load_network("idh.net");
    auto a = analyze_network(net, full_options());
    c.expect(a.A && same_row_lattice(*a.A, Z({{1, 0, 1, 0, 1}, {0, 1, 1, 0, 1}})), "lifted lattice");
    c.expect(a.report.all_positive && a.report.all_positive->status == AllPositive::Yes,
             "nondegenerate for all positive (reduced)");
    c.expect(a.verdict == Verdict::Toric, "verdict Toric");
    c.expect(a.report.injectivity && a.report.injectivity->outcome == InjectivityOutcome::Toric, "via injectivity");
    c.expect(a.acr.size() == 5 && a.acr[3] == AcrFlag::ACR &&
                 std::count(a.acr.begin(), a.acr.end(), AcrFlag::ACR) == 1,
             "ACR = {X4}");
    c.expect(a.multistationarity && a.multistationarity->outcome == Multistationarity::Monostationary,
             "Monostationary");

    // The six-term determinant lives on the unreduced system.
    auto opts = full_options();
    opts.reduce = false;
    auto d = analyze_network(net, opts);
    c.expect(d.verdict == Verdict::Toric, "unreduced verdict Toric");
    c.expect(d.A && same_row_lattice(*d.A, Z({{1, 0, 1, 0, 1}, {0, 1, 1, 0, 1}})), "unreduced lattice");
    c.expect(d.report.all_positive && d.report.all_positive->status == AllPositive::Yes,
             "nondegenerate for all positive (unreduced)");
    bool det_ok = false;
    if (d.report.injectivity && d.report.injectivity->determinant) {
        const auto& det = *d.report.injectivity->determinant;
        auto expected = product_sum(det.variables(), {{-1, {"alpha1", "alpha3", "alpha4", "mu1", "mu3", "mu4"}},
                                                      {-1, {"alpha1", "alpha4", "alpha5", "mu1", "mu4", "mu6"}},
                                                      {-1, {"alpha2", "alpha3", "alpha4", "mu1", "mu3", "mu4"}},
                                                      {-1, {"alpha2", "alpha4", "alpha5", "mu1", "mu4", "mu6"}},
                                                      {-1, {"alpha3", "alpha4", "alpha5", "mu2", "mu4", "mu6"}},
                                                      {-1, {"alpha3", "alpha4", "alpha5", "mu3", "mu4", "mu6"}}});
        det_ok = same_up_to_sign(det, expected);
    }
    c.expect(det_ok, "injectivity determinant equals the six-term polynomial up to sign");
}

void figure_example(Check& c) {
    auto first = analyze(load_matrix("fig_first.json").system, GroupMode::Positive, 1);
    c.expect(first.invariance && same_row_lattice(first.invariance->A, Z({{10, 15, 2}})), "lattice <(10,15,2)>");
    c.expect(first.quasihomogeneity && first.quasihomogeneity->rows() == 0, "quasihomogeneity rank 0");
    auto second = analyze(load_matrix("fig_second.json").system, GroupMode::Positive, 1);
    c.expect(second.invariance && second.invariance->d == 0, "second system d = 0");
}

void infinitely_many_cosets(Check& c) {
    auto in = load_matrix("infinitely_many_cosets.json");
    auto r = analyze(in.system, GroupMode::Positive, 1);
    c.expect(r.invariance && same_row_lattice(r.invariance->A, Z({{1, 1, 1}})), "lattice <(1,1,1)>");
    c.expect(r.nondegeneracy && r.nondegeneracy->status == Nondegeneracy::Yes, "nondegenerate");
    c.expect(r.invariance && r.s + r.invariance->d == 2 && r.n == 3, "s + d = 2 < 3");
    c.expect(r.verdict == Verdict::NotLocallyToric, "NotLocallyToric");
}

void square_network(Check& c) {
    auto net = load_network("square.net");
    auto a = analyze_network(net, full_options());
    c.expect(a.report.injectivity && a.report.injectivity->outcome == InjectivityOutcome::Inconclusive,
             "injectivity Inconclusive");
    c.expect(a.verdict != Verdict::Toric && a.verdict != Verdict::LocallyToric,
             "local toricity for all kappa not claimed");

    auto sys = steady_state_system(net);
    auto inv = invariance_group(sys, GroupMode::Positive);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(1, 40), den(1, 7);
    for (int trial = 0; trial < 3; ++trial) {
        RationalVector p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        for (auto& x : p) x.canonicalize();
        auto three = count_positive_cosets(coset_counting_system_at(sys, inv, vec({"0.01", "3", "1", "1"}), p));
        auto one = count_positive_cosets(coset_counting_system_at(sys, inv, vec({"0.01", "1", "1", "1"}), p));
        c.expect(three.kind == CountKind::Exact && three.count == 3,
                 "3 cosets at kappa=(0.01,3,1,1), p=(" + to_string(p[0]) + "," + to_string(p[1]) + ")");
        c.expect(one.kind == CountKind::Exact && one.count == 1,
                 "1 coset at kappa=(0.01,1,1,1), p=(" + to_string(p[0]) + "," + to_string(p[1]) + ")");
    }
}

void triangle_network(Check& c) {
    auto opts = full_options();
    opts.analyze.kappa = vec({"1", "1", "1", "1"});
    auto a = analyze_network(load_network("triangle.net"), opts);
    const auto& r = a.report;
    c.expect(r.mixed_volume && *r.mixed_volume == 6, "mixed volume 6");
    c.expect(r.constant_cosets && r.constant_cosets->all_yes(), "conditions (i)(ii)(iii) Yes");
    c.expect(r.count && r.count->kind == CountKind::Exact && r.count->count == 1, "Exact count 1 at kappa=1");
    c.expect(a.verdict == Verdict::Toric, "verdict Toric");
    c.expect(r.all_kappa, "Z_{>0} = R^4_{>0} noted");
}

void shinar_feinberg(Check& c) {
    auto net = load_network("shinar_feinberg.net");
    auto a = analyze_network(net, full_options());
    c.expect(a.reduced && a.reduced->choice.intermediates.size() == 3, "three intermediates");
    c.expect(a.report.injectivity && a.report.injectivity->outcome == InjectivityOutcome::Toric,
             "reduced injectivity Toric");
    c.expect(a.A && same_row_lattice(*a.A, Z({{1, 1, 1, 0, 1, 1, 0, 1, 1}, {0, 0, 0, 1, -1, 0, 0, 0, 0}})),
             "lifted lattice");
    auto opts = full_options();
    opts.reduce = false;
    auto d = analyze_network(net, opts);
    c.expect(d.report.injectivity && d.report.injectivity->outcome == InjectivityOutcome::Inconclusive,
             "unreduced injectivity Inconclusive");
}

void straube(Check& c) {
    auto a = analyze_network(load_network("straube.net"), full_options());
    c.expect(a.verdict == Verdict::Toric, "verdict Toric");
    c.expect(a.report.injectivity && a.report.injectivity->outcome == InjectivityOutcome::Toric, "via injectivity");
    c.expect(std::none_of(a.acr.begin(), a.acr.end(), [](AcrFlag f) { return f == AcrFlag::ACR; }), "no ACR");
    c.expect(a.multistationarity && a.multistationarity->outcome == Multistationarity::Multistationary,
             "Multistationary");
}

void property_suites(Check& c) {
    for (const auto& r : {properties::matroid_partition_suite(), properties::invariance_suite(),
                          properties::mixed_volume_suite(), properties::sturm_suite(),
                          properties::determinant_suite()}) {
        std::cout << "      " << r.name << ": " << (r.cases - r.failures) << "/" << r.cases << "\n";
        c.expect(r.ok(), r.name + (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
    }
}

std::string run_batch(int jobs, const fs::path& out) {
    std::string cmd = "'" + std::string(TORICITY_CLI) + "' batch '" + MODELS_DIR + "' --report '" + out.string() +
                      "' --jobs " + std::to_string(jobs) + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {};
    return read_file(out);
}

void batch_determinism(Check& c) {
    auto dir = fs::temp_directory_path() / ("toricity_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto one = run_batch(1, dir / "jobs1.json");
    auto eight = run_batch(8, dir / "jobs8.json");
    c.expect(!one.empty(), "batch --jobs 1 ran");
    c.expect(!one.empty() && one == eight, "byte-identical reports for --jobs 1 and --jobs 8");
    if (!one.empty()) {
        auto got = nlohmann::json::parse(one);
        auto golden = nlohmann::json::parse(read_file(GOLDEN_REPORT));
        bool same = got["models"].size() == golden["models"].size();
        for (std::size_t i = 0; same && i < got["models"].size(); ++i)
            same = got["models"][i]["model"] == golden["models"][i]["model"] &&
                   got["models"][i]["verdict"] == golden["models"][i]["verdict"];
        c.expect(same, "verdicts match the golden report");
    }
    fs::remove_all(dir);
}

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "IDH end-to-end", 5, idh_end_to_end},
        {2, "figure example lattices", 1, figure_example},
        {3, "infinitely many cosets", 1, infinitely_many_cosets},
        {4, "square network coset counts", 2, square_network},
        {5, "triangle network", 5, triangle_network},
        {6, "Shinar-Feinberg reduction", 10, shinar_feinberg},
        {7, "Straube network", 10, straube},
        {8, "property suites", 300, property_suites},
        {9, "batch determinism", 60, batch_determinism},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_s) check.failures.push_back("runtime over " + std::to_string(cr.limit_s) + " s");
        bool pass = check.failures.empty();
        if (!pass) ++failed;
        std::printf("%s [%d] %s (%.3f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(), secs,
                    cr.limit_s);
        for (const auto& f : check.failures) std::printf("      failed: %s\n", f.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
