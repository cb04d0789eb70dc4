#pragma once

// Dense univariate polynomials over Q.

#include "sspairs/rational.hpp"

#include <string>
#include <utility>

namespace sspairs {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients low-to-high; trailing zeros are dropped.
  explicit UPoly(RVector coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RVector& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  RVector c_;
};

/// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws if b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, int e);

/// Rational roots of a nonzero polynomial (distinct, ascending).
RVector rational_roots(const UPoly& p);

}  // namespace sspairs
