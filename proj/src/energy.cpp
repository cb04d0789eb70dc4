#include "sspairs/energy.hpp"

#include "sspairs/random.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sspairs {

HermitianStructure::HermitianStructure(ModuleDescriptor module, HermitianKind kind)
    : module_(std::move(module)), kind_(kind) {
  if (kind_ == HermitianKind::Bombieri && module_.kind() != ShapeKind::Trivial &&
      !(module_.kind() == ShapeKind::Sym && module_.rank() == 1))
    throw std::invalid_argument("Bombieri structure is defined only for Sym(d) of SL(2)");
}

Rational HermitianStructure::basis_weight(const BasisKey& key) const {
  if (kind_ == HermitianKind::WeightOrthonormal || module_.kind() == ShapeKind::Trivial) return 1;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(module_.degree()), static_cast<unsigned long>(key[0]));
  return Rational(Integer(1), binom);
}

Rational HermitianStructure::squared_norm(const WeightedVector& x) const {
  if (!(x.module() == module_)) throw std::invalid_argument("Hermitian structure: module mismatch");
  Rational total = 0;
  for (const auto& [key, c] : x.terms()) total += basis_weight(key) * c * c;
  return total;
}

PairHermitian PairHermitian::standard(const Pair& p, HermitianKind kind) {
  return {HermitianStructure(p.v.module(), kind), HermitianStructure(p.w.module(), kind)};
}

double energy(const Pair& p, const RMatrix& sigma, const PairHermitian& h) {
  const Rational nw = h.w.squared_norm(matrix_action(sigma, p.w));
  const Rational nv = h.v.squared_norm(matrix_action(sigma, p.v));
  if (nv == 0 || nw == 0) throw std::domain_error("energy: zero vector after the action");
  return log_abs(nw) - log_abs(nv);
}

double energy(const Pair& p, const RMatrix& sigma) { return energy(p, sigma, PairHermitian::standard(p)); }

namespace {

std::map<BasisKey, std::size_t> basis_index(const ModuleDescriptor& m) {
  std::map<BasisKey, std::size_t> idx;
  const auto keys = basis(m);
  for (std::size_t i = 0; i < keys.size(); ++i) idx.emplace(keys[i], i);
  return idx;
}

CVector to_cvector(const WeightedVector& x) {
  const auto idx = basis_index(x.module());
  CVector out(idx.size(), 0.0);
  for (const auto& [key, c] : x.terms()) out[idx.at(key)] = to_double(c);
  return out;
}

std::vector<double> metric_weights(const HermitianStructure& h) {
  std::vector<double> out;
  for (const auto& key : basis(h.module())) out.push_back(to_double(h.basis_weight(key)));
  return out;
}

double weighted_norm2(const CVector& x, const std::vector<double>& w) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (w.empty() ? 1.0 : w[i]) * std::norm(x[i]);
  return s;
}

std::complex<double> weighted_inner(const CVector& x, const CVector& y, const std::vector<double>& w) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (w.empty() ? 1.0 : w[i]) * std::conj(x[i]) * y[i];
  return s;
}

template <class V>
V concat(const V& a, const V& b) {
  V out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double residual_from_vectors(double nu, const CVector& sv, const CVector& sw, const PairHermitian& h) {
  const auto weights = concat(metric_weights(h.v), metric_weights(h.w));
  const CVector x = concat(sv, sw);
  const CVector y = concat(sv, CVector(sw.size(), 0.0));
  const double d = fs_distance(x, y, weights);
  const double t = std::tan(d);
  return std::abs(nu - std::log(t * t));
}

}  // namespace

CVector act(const CMatrix& sigma, const WeightedVector& x) {
  const CMatrix m = action_matrix(x.module(), sigma);
  const CVector in = to_cvector(x);
  CVector out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * in[j];
  return out;
}

double energy(const Pair& p, const CMatrix& sigma, const PairHermitian& h) {
  const double nw = weighted_norm2(act(sigma, p.w), metric_weights(h.w));
  const double nv = weighted_norm2(act(sigma, p.v), metric_weights(h.v));
  if (nv == 0 || nw == 0) throw std::domain_error("energy: zero vector after the action");
  return std::log(nw) - std::log(nv);
}

double fs_distance(const CVector& x, const CVector& y, const std::vector<double>& weights) {
  if (x.size() != y.size()) throw std::invalid_argument("fs_distance: length mismatch");
  const double nx = std::sqrt(weighted_norm2(x, weights));
  const double ny = std::sqrt(weighted_norm2(y, weights));
  if (nx == 0 || ny == 0) throw std::domain_error("fs_distance: zero vector");
  // Split x into its component along y and the orthogonal residual; atan2 of
  // the two lengths stays accurate near 0 and pi/2.
  const std::complex<double> c = weighted_inner(y, x, weights) / (ny * ny);
  CVector perp(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) perp[i] = x[i] - c * y[i];
  const double along = std::abs(c) * ny;
  const double across = std::sqrt(weighted_norm2(perp, weights));
  return std::atan2(across, along);
}

double distance_identity_residual(const Pair& p, const RMatrix& sigma, const PairHermitian& h) {
  const WeightedVector sv = matrix_action(sigma, p.v);
  const WeightedVector sw = matrix_action(sigma, p.w);
  const double nu = log_abs(h.w.squared_norm(sw)) - log_abs(h.v.squared_norm(sv));
  return residual_from_vectors(nu, to_cvector(sv), to_cvector(sw), h);
}

double distance_identity_residual(const Pair& p, const CMatrix& sigma, const PairHermitian& h) {
  return residual_from_vectors(energy(p, sigma, h), act(sigma, p.v), act(sigma, p.w), h);
}

double EnergyProfile::log_t2(std::size_t i) const { return 2.0 * std::log(t.at(i)); }

namespace {

struct LogTerm {
  double log_coeff;  // log(|e_key|^2 c^2)
  long exponent;     // <chi, u>
};

std::vector<LogTerm> log_terms(const WeightedVector& x, const HermitianStructure& h, const Cocharacter& u) {
  std::vector<LogTerm> out;
  for (const auto& [key, c] : x.terms())
    out.push_back({log_abs(h.basis_weight(key) * c * c), pairing(weight_of(x.module(), key), u)});
  return out;
}

double log_norm2_at(const std::vector<LogTerm>& terms, double log_t) {
  double hi = -INFINITY;
  for (const auto& term : terms) hi = std::max(hi, term.log_coeff + 2.0 * static_cast<double>(term.exponent) * log_t);
  double s = 0;
  for (const auto& term : terms) s += std::exp(term.log_coeff + 2.0 * static_cast<double>(term.exponent) * log_t - hi);
  return hi + std::log(s);
}

}  // namespace

EnergyProfile energy_along_1ps(const Pair& p, const Cocharacter& u, const std::vector<double>& grid,
                               const PairHermitian& h) {
  if (grid.empty()) throw std::invalid_argument("energy_along_1ps: empty grid");
  if (u.size() != p.ambient()) throw std::invalid_argument("energy_along_1ps: cocharacter length mismatch");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0 && grid[i] <= 1)) throw std::invalid_argument("energy_along_1ps: t must lie in (0, 1]");
    if (i > 0 && !(grid[i] < grid[i - 1])) throw std::invalid_argument("energy_along_1ps: t must be strictly decreasing");
  }
  const auto tv = log_terms(p.v, h.v, u);
  const auto tw = log_terms(p.w, h.w, u);
  EnergyProfile prof;
  prof.u = u;
  prof.t = grid;
  for (double t : grid) {
    const double lt = std::log(t);
    prof.nu.push_back(log_norm2_at(tw, lt) - log_norm2_at(tv, lt));
  }
  return prof;
}

EnergyProfile energy_along_1ps(const Pair& p, const Cocharacter& u, const std::vector<double>& grid) {
  return energy_along_1ps(p, u, grid, PairHermitian::standard(p));
}

std::vector<double> log_grid(double tmin, double tmax, std::size_t count) {
  if (!(tmin > 0 && tmin < tmax && tmax <= 1) || count < 2)
    throw std::invalid_argument("log_grid: need 0 < tmin < tmax <= 1 and at least two points");
  std::vector<double> out;
  const double a = std::log(tmax), b = std::log(tmin);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1)));
  out.front() = tmax;
  out.back() = tmin;
  return out;
}

double asymptotic_slope(const EnergyProfile& profile) {
  const std::size_t n = profile.t.size();
  if (n < 3 || profile.nu.size() != n) throw std::invalid_argument("asymptotic_slope: need at least 3 samples");
  if (profile.t.front() / profile.t.back() < 100.0)
    throw std::invalid_argument("asymptotic_slope: samples must span at least two decades of t");
  const std::size_t take = std::max<std::size_t>(3, n / 2);
  double sx = 0, sy = 0;
  for (std::size_t i = n - take; i < n; ++i) {
    sx += profile.log_t2(i);
    sy += profile.nu[i];
  }
  const double mx = sx / static_cast<double>(take), my = sy / static_cast<double>(take);
  double sxy = 0, sxx = 0;
  for (std::size_t i = n - take; i < n; ++i) {
    const double dx = profile.log_t2(i) - mx;
    sxy += dx * (profile.nu[i] - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

EnergySample energy_infimum_sample(const Pair& p, const PairHermitian& h, std::size_t samples, std::uint64_t seed) {
  EnergySample out;
  out.sigma = RMatrix::identity(p.ambient());
  out.best = energy(p, out.sigma, h);
  out.evaluated = 1;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    RMatrix sigma = random_elementary_sl(rng, p.ambient());
    const double e = energy(p, sigma, h);
    ++out.evaluated;
    if (e < out.best) {
      out.best = e;
      out.sigma = std::move(sigma);
    }
  }
  return out;
}

}  // namespace sspairs
