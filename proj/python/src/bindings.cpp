#include "toricity/io.hpp"
#include "toricity/univariate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace toricity;

namespace {

// Rationals cross the boundary as strings; the Python layer turns them into
// fractions.Fraction.
Rational to_rational_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

RationalMatrix rational_matrix(const py::sequence& rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& e : row.cast<py::sequence>()) r.push_back(to_rational_py(e));
        out.push_back(std::move(r));
    }
    return RationalMatrix::from_rows(out);
}

IntegerMatrix integer_matrix(const py::sequence& rows) {
    std::vector<std::vector<Integer>> out;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (const auto& e : row.cast<py::sequence>()) r.emplace_back(py::str(e).cast<std::string>());
        out.push_back(std::move(r));
    }
    return IntegerMatrix::from_rows(out);
}

std::vector<std::vector<long long>> rows_of(const IntegerMatrix& m) {
    std::vector<std::vector<long long>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).get_si());
    return out;
}

VerticalSystem make_system(const py::sequence& C, const py::sequence& M) {
    return VerticalSystem(rational_matrix(C), integer_matrix(M));
}

Tri parse_boundary(const std::string& text) {
    if (text == "yes") return Tri::Yes;
    if (text == "unknown") return Tri::Unknown;
    throw ToricityError(ErrorKind::Parse, "boundary must be \"yes\" or \"unknown\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Toric invariance and toricity of vertically parametrized systems";

    static py::exception<ToricityError> error(m, "ToricityError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ToricityError& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.what()));
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def(
        "analyze_json",
        [](const py::sequence& C, const py::sequence& M, const std::string& mode, std::uint64_t seed,
           const std::string& boundary) {
            AnalyzeOptions opts;
            opts.boundary = parse_boundary(boundary);
            return to_json(analyze(make_system(C, M), parse_group_mode(mode), seed, opts)).dump();
        },
        py::arg("C"), py::arg("M"), py::arg("mode") = "positive", py::arg("seed") = 1, py::arg("boundary") = "unknown",
        "Full analysis; returns the JSON report as a string.");

    m.def(
        "invariance_group",
        [](const py::sequence& C, const py::sequence& M, const std::string& mode) {
            auto inv = invariance_group(make_system(C, M), parse_group_mode(mode));
            return py::make_tuple(rows_of(inv.A), inv.partition.blocks);
        },
        py::arg("C"), py::arg("M"), py::arg("mode") = "positive",
        "Returns (A, matroid partition blocks) with A in Hermite normal form.");

    m.def(
        "matroid_partition",
        [](const py::sequence& C) {
            auto c = rational_matrix(C);
            IntegerMatrix zero(1, c.cols());
            return matroid_partition(VerticalSystem(c, zero)).blocks;
        },
        py::arg("C"));

    m.def(
        "mixed_volume",
        [](const std::vector<std::vector<std::vector<std::int64_t>>>& supports) {
            std::vector<SupportSet> sets;
            for (const auto& pts : supports) {
                SupportSet s;
                for (const auto& p : pts) s.points.push_back(p);
                std::sort(s.points.begin(), s.points.end());
                s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
                sets.push_back(std::move(s));
            }
            return mixed_volume(sets).get_str();
        },
        py::arg("supports"), "Bernstein count of n supports in Z^n, as a decimal string.");

    m.def(
        "sturm_count",
        [](const py::sequence& coeffs, const py::object& lo, const py::object& hi) {
            RationalVector c;
            for (const auto& e : coeffs) c.push_back(to_rational_py(e));
            std::optional<Rational> a, b;
            if (!lo.is_none()) a = to_rational_py(lo);
            if (!hi.is_none()) b = to_rational_py(hi);
            return count_roots_in_interval(UnivariatePolynomial(c), a, b);
        },
        py::arg("coeffs"), py::arg("lo") = py::none(), py::arg("hi") = py::none(),
        "Distinct real roots in the open interval (lo, hi) of the polynomial with coefficients listed from the constant term up.");

    m.def(
        "count_cosets",
        [](const py::sequence& C, const py::sequence& M, const py::sequence& kappa, const py::object& p, std::uint64_t seed) {
            auto sys = make_system(C, M);
            auto inv = invariance_group(sys, GroupMode::Positive);
            RationalVector k;
            for (const auto& e : kappa) k.push_back(to_rational_py(e));
            CosetCountingSystem h = [&] {
                if (p.is_none()) return coset_counting_system(sys, inv, k, seed);
                RationalVector pt;
                for (const auto& e : p.cast<py::sequence>()) pt.push_back(to_rational_py(e));
                return coset_counting_system_at(sys, inv, k, pt);
            }();
            CountOptions opts;
            opts.seed = seed;
            auto r = count_positive_cosets(h, opts);
            return py::make_tuple(std::string(to_string(r.kind)), r.count, r.detail);
        },
        py::arg("C"), py::arg("M"), py::arg("kappa"), py::arg("p") = py::none(), py::arg("seed") = 1,
        "Returns (kind, count, detail) for the coset counting system at kappa.");

    m.def(
        "network_json",
        [](const std::string& text, bool reduce, bool multistationarity, bool acr, bool structure, std::uint64_t seed) {
            NetworkOptions opts;
            opts.reduce = reduce;
            opts.multistationarity = multistationarity;
            opts.acr = acr;
            opts.structure = structure;
            opts.seed = seed;
            return to_json(analyze_network(parse_network(text), opts)).dump();
        },
        py::arg("text"), py::arg("reduce") = true, py::arg("multistationarity") = false, py::arg("acr") = false,
        py::arg("structure") = false, py::arg("seed") = 1, "Network analysis; returns the JSON report as a string.");

    m.def(
        "mass_action_matrices",
        [](const std::string& text) {
            auto net = parse_network(text);
            auto mats = mass_action_matrices(net);
            return py::make_tuple(net.species, rows_of(mats.N), rows_of(mats.M));
        },
        py::arg("text"), "Returns (species, N, M) for a network.");
}
