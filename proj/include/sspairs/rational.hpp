#pragma once

// Exact scalar types shared by every module. All lattice, polytope and
// polynomial work runs over GMP integers and rationals; only the energy
// module drops to double precision.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sspairs {

using Integer = mpz_class;
using Rational = mpq_class;
using RVector = std::vector<Rational>;
using IVector = std::vector<long>;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const RVector& v);

RVector to_rational(const IVector& v);
Rational dot(const RVector& a, const RVector& b);
Rational dot(const RVector& a, const IVector& b);

/// Smallest positive integer multiple of v that is integral. Throws
/// std::overflow_error if a coordinate does not fit in a long.
IVector clear_denominators(const RVector& v);

long to_long(const Integer& z);
double to_double(const Rational& q);

/// log|q| without overflow for very large or very small magnitudes. q != 0.
double log_abs(const Rational& q);

}  // namespace sspairs
