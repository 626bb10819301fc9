#include "toricity/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace toricity {

using nlohmann::ordered_json;

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_number_float()) return parse_rational(v.dump());
    throw ToricityError(ErrorKind::Parse, "matrix entries must be numbers or rational strings");
}

Integer json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        Rational q = parse_rational(v.get<std::string>());
        if (q.get_den() != 1) throw ToricityError(ErrorKind::Parse, "exponent matrix entries must be integers");
        return q.get_num();
    }
    throw ToricityError(ErrorKind::Parse, "exponent matrix entries must be integers");
}

template <typename T, typename F>
DenseMatrix<T> json_matrix(const nlohmann::json& v, const char* name, F convert) {
    if (!v.is_array()) throw ToricityError(ErrorKind::Parse, std::string(name) + " must be an array of rows");
    std::vector<std::vector<T>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) throw ToricityError(ErrorKind::Parse, std::string(name) + " must be an array of rows");
        std::vector<T> r;
        for (const auto& e : row) r.push_back(convert(e));
        rows.push_back(std::move(r));
    }
    return DenseMatrix<T>::from_rows(rows);
}

std::vector<std::string> json_names(const nlohmann::json& obj, const char* key) {
    std::vector<std::string> out;
    if (!obj.contains(key)) return out;
    for (const auto& v : obj.at(key)) out.push_back(v.get<std::string>());
    return out;
}

RationalMatrix c_from_n(const IntegerMatrix& N) {
    if (N.is_zero()) throw ToricityError(ErrorKind::ZeroDynamics, "the stoichiometric matrix is zero");
    return row_basis(to_rational(N));
}

MatrixInput assemble(RationalMatrix c, IntegerMatrix m, std::vector<std::string> vars,
                     std::vector<std::string> params, GroupMode mode, Tri boundary) {
    if (c.cols() != m.cols()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "C has " + std::to_string(c.cols()) + " columns but M has " +
                                                              std::to_string(m.cols()));
    }
    return MatrixInput{VerticalSystem(std::move(c), std::move(m), std::move(vars), std::move(params)), mode, boundary};
}

ordered_json matrix_json(const IntegerMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).fits_slong_p()) {
                row.push_back(m(r, c).get_si());
            } else {
                row.push_back(m(r, c).get_str());
            }
        }
        rows.push_back(row);
    }
    return rows;
}

ordered_json matrix_json(const RationalMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

template <typename V>
ordered_json string_vector(const V& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

MatrixInput parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ToricityError(ErrorKind::Parse, e.what());
    }
    if (!doc.is_object()) throw ToricityError(ErrorKind::Parse, "matrix input must be a JSON object");
    try {
        if (!doc.contains("M")) throw ToricityError(ErrorKind::Parse, "missing \"M\"");
        IntegerMatrix m = json_matrix<Integer>(doc.at("M"), "M", json_integer);
        RationalMatrix c;
        if (doc.contains("C")) {
            c = json_matrix<Rational>(doc.at("C"), "C", json_rational);
        } else if (doc.contains("N")) {
            c = c_from_n(json_matrix<Integer>(doc.at("N"), "N", json_integer));
        } else {
            throw ToricityError(ErrorKind::Parse, "missing \"C\" or \"N\"");
        }
        GroupMode mode = doc.contains("mode") ? parse_group_mode(doc.at("mode").get<std::string>()) : GroupMode::Positive;
        Tri boundary = Tri::Unknown;
        if (doc.contains("boundary")) {
            auto b = doc.at("boundary").get<std::string>();
            if (b == "yes") {
                boundary = Tri::Yes;
            } else if (b != "unknown") {
                throw ToricityError(ErrorKind::Parse, "\"boundary\" must be \"yes\" or \"unknown\"");
            }
        }
        return assemble(std::move(c), std::move(m), json_names(doc, "variables"), json_names(doc, "parameters"), mode,
                        boundary);
    } catch (const nlohmann::json::exception& e) {
        throw ToricityError(ErrorKind::Parse, e.what());
    }
}

MatrixInput parse_matrix_csv(const std::string& text) {
    std::map<std::string, std::vector<std::vector<std::string>>> sections;
    std::string current;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::string name = line.substr(first + 1);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name != "C" && name != "N" && name != "M")
                throw ToricityError(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown section " + name);
            current = name;
            sections[current];
            continue;
        }
        if (current.empty()) throw ToricityError(ErrorKind::Parse, "line " + std::to_string(lineno) + ": row outside a section");
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t"));
            cell.erase(cell.find_last_not_of(" \t") + 1);
            cells.push_back(cell);
        }
        sections[current].push_back(cells);
    }
    auto to_matrix = [&](const std::string& name) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& r : sections.at(name)) {
            std::vector<Rational> out;
            for (const auto& c : r) out.push_back(parse_rational(c));
            rows.push_back(out);
        }
        return RationalMatrix::from_rows(rows);
    };
    if (!sections.count("M")) throw ToricityError(ErrorKind::Parse, "missing section # M");
    IntegerMatrix m;
    try {
        m = to_integer(to_matrix("M"));
    } catch (const ToricityError&) {
        throw ToricityError(ErrorKind::Parse, "exponent matrix entries must be integers");
    }
    RationalMatrix c;
    if (sections.count("C")) {
        c = to_matrix("C");
    } else if (sections.count("N")) {
        c = c_from_n(to_integer(to_matrix("N")));
    } else {
        throw ToricityError(ErrorKind::Parse, "missing section # C or # N");
    }
    return assemble(std::move(c), std::move(m), {}, {}, GroupMode::Positive, Tri::Unknown);
}

std::string write_matrix_json(const VerticalSystem& sys, GroupMode mode) {
    ordered_json doc;
    doc["C"] = matrix_json(sys.input_C());
    doc["M"] = matrix_json(sys.M());
    doc["mode"] = to_string(mode);
    doc["variables"] = sys.variables();
    doc["parameters"] = sys.parameters();
    return doc.dump(2) + "\n";
}

ModelKind model_kind(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    return (ext == ".json" || ext == ".csv") ? ModelKind::Matrix : ModelKind::Network;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ToricityError(ErrorKind::Parse, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json to_json(const ToricityReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["mode"] = to_string(rep.mode);
    j["seed"] = rep.seed;
    j["s"] = rep.s;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["positive_locus"] = rep.positive_locus;
    if (rep.invariance) {
        ordered_json inv;
        inv["d"] = rep.invariance->d;
        inv["A"] = matrix_json(rep.invariance->A);
        inv["partition"] = rep.invariance->partition.blocks;
        j["invariance"] = inv;
    }
    if (rep.quasihomogeneity) j["quasihomogeneity"] = matrix_json(*rep.quasihomogeneity);
    j["binomial"] = rep.binomial;
    if (rep.nondegeneracy) {
        j["nondegeneracy"] = {{"status", to_string(rep.nondegeneracy->status)},
                              {"witness", string_vector(rep.nondegeneracy->witness)},
                              {"method", rep.nondegeneracy->method}};
    }
    if (rep.all_positive) {
        ordered_json ap;
        ap["status"] = to_string(rep.all_positive->status);
        ap["rays"] = rep.all_positive->rays.rays.size();
        ap["columns"] = rep.all_positive->columns;
        if (rep.all_positive->status == AllPositive::Yes) ap["minor"] = rep.all_positive->minor.to_string();
        j["all_positive"] = ap;
    }
    if (rep.injectivity) {
        ordered_json inj;
        inj["outcome"] = to_string(rep.injectivity->outcome);
        inj["sign"] = to_string(rep.injectivity->sign);
        if (rep.injectivity->determinant) inj["determinant"] = rep.injectivity->determinant->to_string();
        if (!rep.injectivity->reason.empty()) inj["reason"] = rep.injectivity->reason;
        j["injectivity"] = inj;
    }
    if (rep.mixed_volume) j["mixed_volume"] = rep.mixed_volume->get_str();
    if (rep.constant_cosets) {
        const auto& cc = *rep.constant_cosets;
        ordered_json c;
        c["boundary"] = to_string(cc.boundary);
        c["nondegenerate"] = to_string(cc.nondegenerate);
        c["compact"] = to_string(cc.compact);
        if (!cc.note.empty()) c["note"] = cc.note;
        j["constant_cosets"] = c;
    }
    if (rep.count) {
        ordered_json c;
        c["kind"] = to_string(rep.count->kind);
        c["count"] = rep.count->count;
        c["detail"] = rep.count->detail;
        if (rep.count_kappa) c["kappa"] = string_vector(*rep.count_kappa);
        j["count"] = c;
    }
    j["verdict"] = to_string(rep.verdict);
    if (rep.coset_count) j["coset_count"] = *rep.coset_count;
    if (rep.coset_bound) j["coset_bound"] = rep.coset_bound->get_str();
    j["all_kappa"] = rep.all_kappa;
    ordered_json ev = ordered_json::array();
    for (const auto& e : rep.evidence)
        ev.push_back({{"test", e.test}, {"inputs_hash", e.inputs_hash}, {"outcome", e.outcome}});
    j["evidence"] = ev;
    j["notices"] = rep.notices;
    return j;
}

namespace {

ordered_json reactions_json(const ReactionNetwork& net) {
    ordered_json out = ordered_json::array();
    for (const auto& r : net.reactions)
        out.push_back(r.label + ": " + net.complex_string(r.source) + " -> " + net.complex_string(r.target));
    return out;
}

std::vector<std::string> acr_species(const NetworkAnalysis& a, AcrFlag flag) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.acr.size(); ++i)
        if (a.acr[i] == flag) out.push_back(a.network.species[i]);
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

}  // namespace

ordered_json to_json(const NetworkAnalysis& a) {
    ordered_json j;
    j["schema"] = 1;
    j["species"] = a.network.species;
    j["reactions"] = reactions_json(a.network);
    if (a.reduced) {
        ordered_json red;
        std::vector<std::string> ys;
        for (auto y : a.reduced->choice.intermediates) ys.push_back(a.network.species[y]);
        red["intermediates"] = ys;
        red["reactions"] = reactions_json(a.reduced->network);
        red["B"] = matrix_json(a.reduced->B);
        red["surjective"] = a.reduced->surjective == Tri::Yes ? "Yes" : "Conjectural";
        if (a.report.invariance) red["A_tilde"] = matrix_json(a.report.invariance->A);
        j["reduction"] = red;
    }
    j["siphon_boundary"] = to_string(a.siphon);
    if (a.A) j["A"] = matrix_json(*a.A);
    j["verdict"] = to_string(a.verdict);
    if (a.multistationarity) {
        ordered_json ms;
        ms["outcome"] = to_string(a.multistationarity->outcome);
        if (a.multistationarity->determinant) {
            ms["determinant"] = a.multistationarity->determinant->to_string();
            ms["sign"] = to_string(a.multistationarity->sign);
        }
        if (!a.multistationarity->note.empty()) ms["note"] = a.multistationarity->note;
        j["multistationarity"] = ms;
    }
    if (!a.acr.empty()) {
        ordered_json acr;
        for (std::size_t i = 0; i < a.acr.size(); ++i) acr[a.network.species[i]] = to_string(a.acr[i]);
        j["acr"] = acr;
    }
    if (a.structure) {
        const auto& s = *a.structure;
        j["structure"] = {{"complexes", s.complexes},
                          {"linkage_classes", s.linkage_classes},
                          {"rank", s.rank},
                          {"deficiency", s.deficiency},
                          {"weakly_reversible", s.weakly_reversible},
                          {"matroid_refines_linkage", s.matroid_refines_linkage},
                          {"deficiency_zero_certificate", s.deficiency_zero_certificate}};
    }
    j["notices"] = a.notices;
    j["report"] = to_json(a.report);
    return j;
}

std::string render_text(const ToricityReport& rep) {
    std::ostringstream os;
    os << "system: s=" << rep.s << " m=" << rep.m << " n=" << rep.n << " mode=" << to_string(rep.mode)
       << " seed=" << rep.seed << "\n";
    os << "positive locus: " << (rep.positive_locus ? "nonempty" : "empty") << "\n";
    if (rep.invariance) {
        os << "invariance: d=" << rep.invariance->d << " A=" << to_string(rep.invariance->A) << "\n";
        os << "matroid partition:";
        for (const auto& b : rep.invariance->partition.blocks) {
            os << " {";
            for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k] + 1;
            os << "}";
        }
        os << "\n";
    }
    if (rep.quasihomogeneity) os << "quasihomogeneity: " << to_string(*rep.quasihomogeneity) << "\n";
    if (rep.nondegeneracy)
        os << "nondegeneracy: " << to_string(rep.nondegeneracy->status) << " (" << rep.nondegeneracy->method << ")\n";
    if (rep.injectivity) {
        os << "injectivity: " << to_string(rep.injectivity->outcome) << " (" << to_string(rep.injectivity->sign) << ")\n";
        if (rep.injectivity->determinant) os << "  det = " << rep.injectivity->determinant->to_string() << "\n";
    }
    if (rep.mixed_volume) os << "mixed volume: " << rep.mixed_volume->get_str() << "\n";
    if (rep.all_positive) os << "nondegenerate for all positive: " << to_string(rep.all_positive->status) << "\n";
    if (rep.constant_cosets) {
        const auto& cc = *rep.constant_cosets;
        os << "constant coset conditions: (i) " << to_string(cc.boundary) << " (ii) " << to_string(cc.nondegenerate)
           << " (iii) " << to_string(cc.compact) << "\n";
    }
    if (rep.count) os << "coset count: " << to_string(rep.count->kind) << " " << rep.count->count << " (" << rep.count->detail << ")\n";
    os << "verdict: " << to_string(rep.verdict);
    if (rep.coset_count) os << " (count " << *rep.coset_count << ")";
    else if (rep.coset_bound) os << " (bound " << rep.coset_bound->get_str() << ")";
    os << "\n";
    for (const auto& n : rep.notices) os << "note: " << n << "\n";
    return os.str();
}

std::string render_text(const NetworkAnalysis& a) {
    std::ostringstream os;
    os << "species: " << join(a.network.species, ", ") << "\n";
    os << "reactions: " << a.network.reactions.size() << "\n";
    if (a.reduced) {
        std::vector<std::string> ys;
        for (auto y : a.reduced->choice.intermediates) ys.push_back(a.network.species[y]);
        os << "intermediates: " << join(ys, ", ") << " (surjectivity "
           << (a.reduced->surjective == Tri::Yes ? "Yes" : "Conjectural") << ")\n";
        os << "reduced network:\n";
        for (const auto& r : a.reduced->network.reactions)
            os << "  " << a.reduced->network.complex_string(r.source) << " -> "
               << a.reduced->network.complex_string(r.target) << "\n";
        os << "B: " << to_string(a.reduced->B) << "\n";
        if (a.report.invariance) os << "A (reduced): " << to_string(a.report.invariance->A) << "\n";
    }
    if (a.A) os << "A: " << to_string(*a.A) << "\n";
    os << "siphon boundary check: " << to_string(a.siphon) << "\n";
    if (a.structure) {
        const auto& s = *a.structure;
        os << "structure: complexes=" << s.complexes << " linkage classes=" << s.linkage_classes << " rank=" << s.rank
           << " deficiency=" << s.deficiency << " weakly reversible=" << (s.weakly_reversible ? "yes" : "no")
           << " matroid refines linkage=" << (s.matroid_refines_linkage ? "yes" : "no") << "\n";
    }
    os << render_text(a.report);
    if (a.multistationarity) {
        os << "multistationarity: " << to_string(a.multistationarity->outcome) << "\n";
        if (a.multistationarity->determinant) os << "  det Gamma = " << a.multistationarity->determinant->to_string() << "\n";
        if (!a.multistationarity->note.empty()) os << "  " << a.multistationarity->note << "\n";
    }
    if (!a.acr.empty()) {
        auto acr = acr_species(a, AcrFlag::ACR);
        auto local = acr_species(a, AcrFlag::LocalACR);
        os << "ACR: " << (acr.empty() ? "none" : join(acr, ", ")) << "\n";
        if (!local.empty()) os << "local ACR: " << join(local, ", ") << "\n";
    }
    for (const auto& n : a.notices) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace toricity
