#include "sspairs/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace sspairs {

MPoly::MPoly(std::size_t nvars, long c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exponent(nvars, 0), Integer(c));
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  p.terms_.emplace(std::move(e), Integer(1));
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [e, c] : b.terms_) r.add_term(e, Integer(-c));
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Integer MPoly::evaluate(const std::vector<Integer>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("MPoly::evaluate: wrong number of values");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= p;
    }
    total += t;
  }
  return total;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mag = Integer(abs(c)).get_str();
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    bool has_var = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono += "*";
      mono += "a" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      has_var = true;
    }
    if (!has_var) out += mag;
    else out += (mag == "1" ? "" : mag + "*") + mono;
  }
  return out;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("MPoly division by zero");
  MPoly rem = a;
  MPoly quo(std::max(a.nvars(), b.nvars()));
  const Exponent& lb = b.leading_exponent();
  const Integer& cb = b.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    Exponent e(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      e[i] = lr[i] - lb[i];
      if (e[i] < 0) throw std::logic_error("MPoly exact_div: divisor does not divide");
    }
    const Integer& cr = rem.terms().rbegin()->second;
    if (cr % cb != 0) throw std::logic_error("MPoly exact_div: coefficient not divisible");
    MPoly t(quo.nvars());
    t.add_term(e, Integer(cr / cb));
    quo = quo + t;
    rem = rem - t * b;
  }
  return quo;
}

}  // namespace sspairs
