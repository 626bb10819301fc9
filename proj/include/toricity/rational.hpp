#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricity {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p", "p/q", or a finite decimal such as "-0.01" or "2.5e-3" into a
/// canonical rational. Throws ToricityError(Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

/// Scales a rational vector by the lcm of its denominators and divides by the
/// gcd of the numerators. The zero vector maps to the zero vector.
IntegerVector primitive_integer_vector(std::span<const Rational> v);

/// Divides an integer vector by the gcd of its entries.
IntegerVector make_primitive(IntegerVector v);

/// FNV-1a, used for the input hashes recorded in report evidence.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ULL);
std::string hex_digest(std::uint64_t value);

}  // namespace toricity
