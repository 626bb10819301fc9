#pragma once

// Matrices of the worked examples, entered by hand.

#include "toricity/matrix.hpp"
#include "toricity/toricity.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

using toricity::IntegerMatrix;
using toricity::Rational;
using toricity::RationalMatrix;

inline RationalMatrix Q(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return RationalMatrix::from_rows(out);
}

inline IntegerMatrix Z(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<toricity::Integer>> out;
    for (const auto& r : rows) {
        std::vector<toricity::Integer> row;
        for (long v : r) row.emplace_back(v);
        out.push_back(std::move(row));
    }
    return IntegerMatrix::from_rows(out);
}

inline toricity::RationalVector vec(std::initializer_list<const char*> entries) {
    toricity::RationalVector out;
    for (const char* e : entries) out.push_back(toricity::parse_rational(e));
    return out;
}

inline RationalMatrix idh_C() { return Q({{-1, 1, 1, 0, 0, 0}, {-1, 1, 0, 0, 0, 1}, {0, 0, 0, 1, -1, -1}}); }
inline IntegerMatrix idh_M() {
    return Z({{1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}
inline toricity::VerticalSystem idh() { return {idh_C(), idh_M()}; }
inline IntegerMatrix idh_A() { return Z({{1, 0, 1, 0, 1}, {0, 1, 1, 0, 1}}); }

inline RationalMatrix fig_C() { return Q({{-3, 3, 3, -1, 1}, {1, -1, -1, 1, -1}}); }
inline IntegerMatrix fig_M() { return Z({{6, 3, 0, 1, 0}, {0, 2, 4, 0, 0}, {0, 0, 0, 0, 5}}); }
inline toricity::VerticalSystem fig_first() { return {fig_C(), fig_M()}; }
inline toricity::VerticalSystem fig_second() {
    return {Q({{-1, 1, 1, -1, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, -1, -1, 1, -1}}),
            Z({{6, 3, 0, 1, 0, 6, 3, 0, 1, 0}, {0, 2, 4, 0, 0, 0, 2, 4, 0, 0}, {0, 0, 0, 0, 5, 0, 0, 0, 0, 5}})};
}

inline toricity::VerticalSystem infinitely_many() {
    return {Q({{-1, 1, 1}}), Z({{2, 1, 0}, {0, 2, 2}, {1, 0, 1}})};
}

/// (k1 - k2) x1^3 x2^2 + k3 x2^4 - 2 k4 x1^6
inline toricity::VerticalSystem triangle() { return {Q({{1, -1, 1, -2}}), Z({{3, 3, 0, 6}, {2, 2, 4, 0}})}; }

/// Steady-state row of 9X1 -> 3X1+4X2 -> 6X2 -> 6X1+2X2 -> 9X1, divided by -6.
inline toricity::VerticalSystem square() {
    return {RationalMatrix::from_rows({{Rational(1), Rational(1, 2), Rational(-1), Rational(-1, 2)}}),
            Z({{9, 3, 0, 6}, {0, 4, 6, 2}})};
}

inline const char* idh_network = "X1 + X2 <=> X3 -> X1 + X4 ; X3 + X4 <=> X5 -> X2 + X3";
inline const char* triangle_network = "3X1+2X2->6X1; 3X1+2X2->4X2; 4X2->3X1+2X2; 6X1->4X2";
inline const char* square_network = "9X1 -> 3X1+4X2; 3X1+4X2 -> 6X2; 6X2 -> 6X1+2X2; 6X1+2X2 -> 9X1";
inline const char* shinar_feinberg_network =
    "X1 <=> X2 <=> X3 -> X4\n"
    "X4 + X5 <=> X6 -> X2 + X7\n"
    "X3 + X7 <=> X8 -> X3 + X5\n"
    "X1 + X7 <=> X9 -> X1 + X5\n";
inline const char* straube_network =
    "X1 + X2 <=> X3 -> X2 + X4\n"
    "X4 + X5 <=> X6 -> X1 + X5\n"
    "X7 + X8 <=> X2\n"
    "X5 + X8 <=> X9\n";

}  // namespace fixtures
