#pragma once

// Characters and cocharacters of the diagonal torus of SL(N+1).

#include "sspairs/rational.hpp"

#include <compare>
#include <cstddef>

namespace sspairs {

/// Exponent vector of a diagonal-torus character. Two weights are the same
/// SL character when they differ by a multiple of (1,...,1); comparisons use
/// the representative whose last coordinate is zero.
class Weight {
 public:
  Weight() = default;
  explicit Weight(IVector coords);

  const IVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }

  Weight canonical() const;
  /// coords - mean(coords) * (1,...,1); sums to exactly zero.
  RVector traceless() const;
  bool is_dominant() const;  // weakly decreasing

  friend bool operator==(const Weight& a, const Weight& b);
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  IVector coords_;
};

Weight operator+(const Weight& a, const Weight& b);

/// Integer cocharacter of SL(N+1); coordinates sum to zero.
class Cocharacter {
 public:
  Cocharacter() = default;
  explicit Cocharacter(IVector coords);

  const IVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  Cocharacter scaled(long k) const;

  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;

 private:
  IVector coords_;
};

/// <chi, u>; independent of the representative chosen for chi.
long pairing(const Weight& chi, const Cocharacter& u);

/// Rescales a rational functional to an integer cocharacter: project to trace
/// zero, then clear denominators. Pairings with traceless points keep their sign.
Cocharacter integral_cocharacter(const RVector& functional);

RVector traceless(const RVector& x);

}  // namespace sspairs
