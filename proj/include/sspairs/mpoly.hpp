#pragma once

// Sparse multivariate polynomials with integer coefficients, enough for
// fraction-free elimination on symbolic Sylvester matrices.

#include "sspairs/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sspairs {

using Exponent = std::vector<int>;

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, long c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  /// Lexicographically largest exponent; polynomial must be nonzero.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }

  void add_term(const Exponent& e, const Integer& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Evaluation at an integer point.
  Integer evaluate(const std::vector<Integer>& point) const;
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Integer> terms_;
};

/// a / b when b divides a exactly; throws std::logic_error otherwise.
MPoly exact_div(const MPoly& a, const MPoly& b);

}  // namespace sspairs
