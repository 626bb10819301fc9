#include "toricity/error.hpp"
#include "toricity/matrix.hpp"
#include "toricity/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace toricity {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::TrivialKernel: return "TrivialKernel";
        case ErrorKind::EmptyLocus: return "EmptyLocus";
        case ErrorKind::SizeGuard: return "SizeGuard";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::DegenerateSlice: return "DegenerateSlice";
        case ErrorKind::InvalidChoice: return "InvalidChoice";
        case ErrorKind::ZeroDynamics: return "ZeroDynamics";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
    throw ToricityError(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_number(text);

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        Integer d{std::string(den)};
        if (d == 0) throw ToricityError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
        out = Rational(Integer{std::string(num)}, d);
        out.canonicalize();
    } else {
        // decimal with optional exponent
        long exponent = 0;
        std::string_view mantissa = body;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = body.substr(0, e);
            std::string_view ex = body.substr(e + 1);
            bool eneg = false;
            if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
                eneg = ex.front() == '-';
                ex.remove_prefix(1);
            }
            if (!all_digits(ex) || ex.size() > 6) bad_number(text);
            exponent = std::stol(std::string(ex));
            if (eneg) exponent = -exponent;
        }
        std::string digits;
        auto dot = mantissa.find('.');
        if (dot == std::string_view::npos) {
            if (!all_digits(mantissa)) bad_number(text);
            digits = std::string(mantissa);
        } else {
            auto ip = mantissa.substr(0, dot);
            auto fp = mantissa.substr(dot + 1);
            if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
                (!fp.empty() && !all_digits(fp)))
                bad_number(text);
            digits = std::string(ip) + std::string(fp);
            exponent -= static_cast<long>(fp.size());
        }
        if (digits.empty()) bad_number(text);
        Integer value{digits};
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        if (exponent >= 0) {
            out = Rational(value * scale);
        } else {
            out = Rational(value, scale);
            out.canonicalize();
        }
    }
    if (negative) out = -out;
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

IntegerVector primitive_integer_vector(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntegerVector out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
    return make_primitive(std::move(out));
}

IntegerVector make_primitive(IntegerVector v) {
    Integer g = 0;
    for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g > 1)
        for (auto& z : v) z /= g;
    return v;
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex_digest(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).get_den() != 1) {
                throw ToricityError(ErrorKind::Precondition,
                                    "entry " + to_string(m(r, c)) + " is not an integer");
            }
            out(r, c) = m(r, c).get_num();
        }
    return out;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols()) {
        throw ToricityError(ErrorKind::DimensionMismatch, "matrix-vector product: length mismatch");
    }
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

namespace {
template <typename T>
std::string render(const DenseMatrix<T>& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}
}  // namespace

std::string to_string(const RationalMatrix& m) { return render(m); }
std::string to_string(const IntegerMatrix& m) { return render(m); }

}  // namespace toricity
