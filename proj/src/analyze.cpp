#include "toricity/toricity.hpp"

#include <random>
#include <sstream>

namespace toricity {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::EmptyPositiveLocus: return "EmptyPositiveLocus";
        case Verdict::InvariantOnly: return "InvariantOnly";
        case Verdict::NotLocallyToric: return "NotLocallyToric";
        case Verdict::GenericallyLocallyToric: return "GenericallyLocallyToric";
        case Verdict::GenericallyToric: return "GenericallyToric";
        case Verdict::LocallyToric: return "LocallyToric";
        case Verdict::Toric: return "Toric";
    }
    return "?";
}

namespace {

std::string vector_string(std::span<const Rational> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string vector_string(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

class EvidenceLog {
public:
    EvidenceLog(const VerticalSystem& sys, std::vector<Evidence>& sink)
        : base_(to_string(sys.C()) + "|" + to_string(sys.M())), sink_(sink) {}

    void add(const std::string& test, const std::string& extra, const std::string& outcome) {
        sink_.push_back({test, hex_digest(fnv1a(test + "|" + base_ + "|" + extra)), outcome});
    }

private:
    std::string base_;
    std::vector<Evidence>& sink_;
};

}  // namespace

ToricityReport analyze(const VerticalSystem& sys, GroupMode mode, std::uint64_t seed, const AnalyzeOptions& options) {
    ToricityReport rep;
    rep.mode = mode;
    rep.seed = seed;
    rep.s = sys.s();
    rep.m = sys.m();
    rep.n = sys.n();
    EvidenceLog log(sys, rep.evidence);
    if (sys.row_reduced()) rep.notices.push_back("C was rank deficient and has been replaced by a row basis");

    // Algorithm 1
    rep.positive_locus = positive_locus_nonempty(sys, mode);
    if (mode == GroupMode::Positive) {
        auto w = strictly_positive_kernel(sys.C());
        log.add("positive_kernel", "", w ? "witness " + vector_string(*w) : "empty");
    } else {
        log.add("kernel_support", to_string(mode), rep.positive_locus ? "covers [m]" : "misses columns");
    }
    if (!rep.positive_locus) {
        rep.verdict = Verdict::EmptyPositiveLocus;
        return rep;
    }
    rep.invariance = invariance_group(sys, mode);
    const auto& inv = *rep.invariance;
    {
        std::ostringstream os;
        os << "theta=" << inv.partition.blocks.size() << " d=" << inv.d << " A=" << to_string(inv.A);
        log.add("invariance_group", to_string(mode), os.str());
    }
    rep.quasihomogeneity = quasihomogeneity_weights(sys);
    log.add("quasihomogeneity", "",
            "rank " + std::to_string(rep.quasihomogeneity->rows()) +
                (same_row_lattice(*rep.quasihomogeneity, inv.A) ? ", agrees with invariance" : ", strictly smaller"));
    rep.binomial = binomial_quickcheck(sys);
    log.add("binomial_quickcheck", "", rep.binomial ? "binomial" : "not binomial");

    // nondegeneracy
    rep.nondegeneracy = nondegeneracy(sys, seed);
    log.add("nondegeneracy", std::to_string(seed),
            std::string(to_string(rep.nondegeneracy->status)) + " (" + rep.nondegeneracy->method + ")");
    if (rep.nondegeneracy->status != Nondegeneracy::Yes) {
        rep.verdict = Verdict::InvariantOnly;
        return rep;
    }

    const std::size_t sd = sys.s() + inv.d;
    if (sd < sys.n()) {
        log.add("dimension", "", "s+d=" + std::to_string(sd) + " < n=" + std::to_string(sys.n()));
        rep.verdict = Verdict::NotLocallyToric;
        return rep;
    }
    if (sd > sys.n()) {
        log.add("dimension", "", "s+d=" + std::to_string(sd) + " > n=" + std::to_string(sys.n()));
        rep.notices.push_back("InternalInconsistency: s + d exceeds n for a nondegenerate system");
        rep.verdict = Verdict::InvariantOnly;
        return rep;
    }
    log.add("dimension", "", "s+d=n=" + std::to_string(sys.n()));

    if (mode != GroupMode::Positive) {
        rep.notices.push_back(std::string("tests beyond the dimension count apply to the positive orthant only; skipped in ") +
                              to_string(mode) + " mode");
        rep.verdict = Verdict::GenericallyLocallyToric;
        return rep;
    }

    rep.all_positive = nondegeneracy_all_positive(sys);
    {
        std::string outcome = to_string(rep.all_positive->status);
        // injectivity
    rep.injectivity = injectivity_test(sys, inv);
    {
        std::string outcome = to_string(rep.injectivity->outcome);
        outcome += std::string(" (") + to_string(rep.injectivity->sign) + ")";
        if (!rep.injectivity->determinant) outcome += ": " + rep.injectivity->reason;
        log.add("injectivity", to_string(inv.A), outcome);
    }
    if (rep.injectivity->outcome == InjectivityOutcome::Toric) {
        rep.verdict = Verdict::Toric;
        return rep;
    }

    // Bernstein bound
    if (sys.n() <= options.max_mixed_volume_dim) {
        auto supports = coset_supports(sys, inv.A);
        rep.mixed_volume = mixed_volume(supports);
        log.add("mixed_volume", to_string(inv.A), rep.mixed_volume->get_str());
    } else {
        rep.notices.push_back("mixed volume skipped: n = " + std::to_string(sys.n()) + " exceeds " +
                              std::to_string(options.max_mixed_volume_dim));
        log.add("mixed_volume", to_string(inv.A), "skipped");
    }

    if (rep.all_positive->status == AllPositive::Yes) {
            outcome += " via columns (";
            for (std::size_t k = 0; k < rep.all_positive->columns.size(); ++k)
                outcome += (k ? "," : "") + std::to_string(rep.all_positive->columns[k] + 1);
            outcome += "): " + rep.all_positive->minor.to_string();
        }
        log.add("nondegeneracy_all_positive", "", outcome);
    }

    if (rep.all_positive->status == AllPositive::Yes) {
        if (rep.mixed_volume && *rep.mixed_volume == 1) {
            rep.verdict = Verdict::Toric;
            return rep;
        }
        rep.constant_cosets = constant_coset_conditions(sys, inv, options.boundary);
        const auto& cc = *rep.constant_cosets;
        log.add("constant_cosets", to_string(inv.A),
                std::string("(i) ") + to_string(cc.boundary) + " (ii) " + to_string(cc.nondegenerate) + " (iii) " +
                    to_string(cc.compact) + (cc.note.empty() ? "" : ": " + cc.note));
        if (cc.compact == Tri::Yes && cc.boundary == Tri::Yes) {
            rep.all_kappa = true;
            rep.notices.push_back("the coset count is constant in kappa and Z_{>0} = R^" + std::to_string(sys.m()) +
                                  "_{>0}");
            RationalVector kappa;
            if (options.kappa) {
                kappa = *options.kappa;
            } else {
                std::mt19937_64 gen(seed ^ 0x6b61707061212121ULL);
                for (std::size_t j = 0; j < sys.m(); ++j) kappa.emplace_back(static_cast<long>(1 + gen() % 64), 8);
                for (auto& k : kappa) k.canonicalize();
            }
            rep.count_kappa = kappa;
            auto h = coset_counting_system(sys, inv, kappa, seed);
            CountOptions copt;
            copt.seed = seed;
            copt.export_path = options.export_path;
            try {
                rep.count = count_positive_cosets(h, copt);
            } catch (const ToricityError& e) {
                rep.count = CountResult{CountKind::Inconclusive, 0, e.what(), {}};
            }
            log.add("coset_count", vector_string(kappa),
                    std::string(to_string(rep.count->kind)) + " " + std::to_string(rep.count->count) + " (" +
                        rep.count->detail + ")");
            if (rep.count->kind == CountKind::Exact) {
                if (rep.count->count == 1) {
                    rep.verdict = Verdict::Toric;
                } else {
                    rep.verdict = Verdict::LocallyToric;
                    rep.coset_count = rep.count->count;
                }
                return rep;
            }
        }
        rep.verdict = Verdict::LocallyToric;
        rep.coset_bound = rep.mixed_volume;
        return rep;
    }
    if (rep.mixed_volume && *rep.mixed_volume == 1) {
        rep.verdict = Verdict::GenericallyToric;
        return rep;
    }
    rep.verdict = Verdict::GenericallyLocallyToric;
    rep.coset_bound = rep.mixed_volume;
    return rep;
}

}  // namespace toricity
