#include "sspairs/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sspairs {

Weight::Weight(IVector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("weight must have at least one coordinate");
}

Weight Weight::canonical() const {
  IVector c = coords_;
  long last = c.back();
  for (auto& x : c) x -= last;
  return Weight(std::move(c));
}

RVector Weight::traceless() const { return sspairs::traceless(to_rational(coords_)); }

bool Weight::is_dominant() const {
  return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>());
}

bool operator==(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  long shift = a.coords_.back() - b.coords_.back();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coords_[i] - b.coords_[i] != shift) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  const IVector ca = a.canonical().coords_;
  const IVector cb = b.canonical().coords_;
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight sum: length mismatch");
  IVector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] + b.coords()[i];
  return Weight(std::move(c));
}

Cocharacter::Cocharacter(IVector coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("cocharacter must have at least one coordinate");
  if (std::accumulate(coords_.begin(), coords_.end(), 0L) != 0)
    throw std::invalid_argument("cocharacter coordinates must sum to zero");
}

Cocharacter Cocharacter::scaled(long k) const {
  IVector c = coords_;
  for (auto& x : c) x *= k;
  return Cocharacter(std::move(c));
}

long pairing(const Weight& chi, const Cocharacter& u) {
  if (chi.size() != u.size()) throw std::invalid_argument("pairing: length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) s += chi.coords()[i] * u.coords()[i];
  return s;
}

RVector traceless(const RVector& x) {
  if (x.empty()) return {};
  Rational mean = 0;
  for (const auto& c : x) mean += c;
  mean /= static_cast<long>(x.size());
  RVector out = x;
  for (auto& c : out) c -= mean;
  return out;
}

Cocharacter integral_cocharacter(const RVector& functional) {
  return Cocharacter(clear_denominators(traceless(functional)));
}

}  // namespace sspairs
