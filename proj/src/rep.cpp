#include "sspairs/rep.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sspairs {

// ---------------------------------------------------------------------------
// ModuleDescriptor

ModuleDescriptor::ModuleDescriptor(int rank, ShapeKind kind, int degree, std::vector<ModuleDescriptor> factors)
    : rank_(rank), kind_(kind), degree_(degree), factors_(std::move(factors)) {
  if (rank_ < 1) throw std::invalid_argument("module rank N must be at least 1");
}

ModuleDescriptor ModuleDescriptor::trivial(int rank) { return {rank, ShapeKind::Trivial, 0, {}}; }

ModuleDescriptor ModuleDescriptor::sym(int rank, int degree) {
  if (degree < 0) throw std::invalid_argument("Sym degree must be nonnegative");
  return {rank, ShapeKind::Sym, degree, {}};
}

ModuleDescriptor ModuleDescriptor::wedge(int rank, int k) {
  if (k < 0 || k > rank + 1) throw std::invalid_argument("Wedge(k) needs 0 <= k <= N+1");
  return {rank, ShapeKind::Wedge, k, {}};
}

ModuleDescriptor ModuleDescriptor::tensor(int rank, std::vector<ModuleDescriptor> factors) {
  if (factors.empty()) throw std::invalid_argument("Tensor needs at least one factor");
  for (const auto& f : factors)
    if (f.rank() != rank) throw std::invalid_argument("Tensor factors must share the group rank");
  return {rank, ShapeKind::Tensor, 0, std::move(factors)};
}

namespace {

struct ShapeParser {
  std::string_view text;
  std::size_t pos = 0;
  int rank;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed module shape '" + std::string(text) + "' at offset " +
                                std::to_string(pos) + ": " + what);
  }
  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool accept(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  int number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  ModuleDescriptor shape() {
    std::string w = word();
    if (w == "Trivial") return ModuleDescriptor::trivial(rank);
    if (w == "Sym" || w == "Wedge") {
      expect('(');
      int k = number();
      expect(')');
      return w == "Sym" ? ModuleDescriptor::sym(rank, k) : ModuleDescriptor::wedge(rank, k);
    }
    if (w == "Tensor") {
      expect('(');
      std::vector<ModuleDescriptor> factors{shape()};
      while (accept(',')) factors.push_back(shape());
      expect(')');
      return ModuleDescriptor::tensor(rank, std::move(factors));
    }
    fail("unknown shape '" + w + "'");
  }
};

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ModuleDescriptor ModuleDescriptor::parse(int rank, std::string_view shape) {
  ShapeParser p{shape, 0, rank};
  ModuleDescriptor m = p.shape();
  p.skip_space();
  if (p.pos != shape.size()) p.fail("trailing characters");
  return m;
}

std::size_t ModuleDescriptor::dimension() const {
  const long n1 = rank_ + 1;
  switch (kind_) {
    case ShapeKind::Trivial: return 1;
    case ShapeKind::Sym: return static_cast<std::size_t>(binomial(degree_ + n1 - 1, n1 - 1));
    case ShapeKind::Wedge: return static_cast<std::size_t>(binomial(n1, degree_));
    case ShapeKind::Tensor: {
      std::size_t d = 1;
      for (const auto& f : factors_) d *= f.dimension();
      return d;
    }
  }
  return 0;
}

std::string ModuleDescriptor::shape_string() const {
  switch (kind_) {
    case ShapeKind::Trivial: return "Trivial";
    case ShapeKind::Sym: return "Sym(" + std::to_string(degree_) + ")";
    case ShapeKind::Wedge: return "Wedge(" + std::to_string(degree_) + ")";
    case ShapeKind::Tensor: {
      std::string s = "Tensor(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += factors_[i].shape_string();
      }
      return s + ")";
    }
  }
  return {};
}

std::size_t ModuleDescriptor::key_length() const {
  switch (kind_) {
    case ShapeKind::Trivial: return 0;
    case ShapeKind::Sym: return ambient();
    case ShapeKind::Wedge: return static_cast<std::size_t>(degree_);
    case ShapeKind::Tensor: {
      std::size_t n = 0;
      for (const auto& f : factors_) n += f.key_length();
      return n;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Bases and weights

namespace {

void compositions(int remaining, std::size_t slot, BasisKey& cur, std::vector<BasisKey>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    cur[slot] = a;
    compositions(remaining - a, slot + 1, cur, out);
  }
}

void combinations(int n, int k, int start, BasisKey& cur, std::vector<BasisKey>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<BasisKey> split_key(const ModuleDescriptor& module, const BasisKey& key) {
  std::vector<BasisKey> parts;
  std::size_t pos = 0;
  for (const auto& f : module.factors()) {
    std::size_t len = f.key_length();
    parts.emplace_back(key.begin() + static_cast<long>(pos), key.begin() + static_cast<long>(pos + len));
    pos += len;
  }
  return parts;
}

}  // namespace

std::vector<BasisKey> basis(const ModuleDescriptor& module) {
  std::vector<BasisKey> out;
  switch (module.kind()) {
    case ShapeKind::Trivial: out.push_back({}); break;
    case ShapeKind::Sym: {
      BasisKey cur(module.ambient(), 0);
      compositions(module.degree(), 0, cur, out);
      break;
    }
    case ShapeKind::Wedge: {
      BasisKey cur;
      combinations(static_cast<int>(module.ambient()), module.degree(), 0, cur, out);
      break;
    }
    case ShapeKind::Tensor: {
      out.push_back({});
      for (const auto& f : module.factors()) {
        std::vector<BasisKey> next;
        for (const auto& prefix : out)
          for (const auto& k : basis(f)) {
            BasisKey c = prefix;
            c.insert(c.end(), k.begin(), k.end());
            next.push_back(std::move(c));
          }
        out = std::move(next);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_basis_key(const ModuleDescriptor& module, const BasisKey& key) {
  if (key.size() != module.key_length()) return false;
  const int n1 = static_cast<int>(module.ambient());
  switch (module.kind()) {
    case ShapeKind::Trivial: return true;
    case ShapeKind::Sym:
      return std::all_of(key.begin(), key.end(), [](int a) { return a >= 0; }) &&
             std::accumulate(key.begin(), key.end(), 0) == module.degree();
    case ShapeKind::Wedge:
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 0 || key[i] >= n1) return false;
        if (i > 0 && key[i] <= key[i - 1]) return false;
      }
      return true;
    case ShapeKind::Tensor: {
      auto parts = split_key(module, key);
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!is_basis_key(module.factors()[i], parts[i])) return false;
      return true;
    }
  }
  return false;
}

Weight weight_of(const ModuleDescriptor& module, const BasisKey& key) {
  IVector w(module.ambient(), 0);
  switch (module.kind()) {
    case ShapeKind::Trivial: break;
    case ShapeKind::Sym:
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = key[i];
      break;
    case ShapeKind::Wedge:
      for (int i : key) w[static_cast<std::size_t>(i)] += 1;
      break;
    case ShapeKind::Tensor: {
      auto parts = split_key(module, key);
      for (std::size_t f = 0; f < parts.size(); ++f) {
        Weight fw = weight_of(module.factors()[f], parts[f]);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += fw.coords()[i];
      }
      break;
    }
  }
  return Weight(std::move(w));
}

std::map<Weight, int> weight_multiplicities(const ModuleDescriptor& module) {
  std::map<Weight, int> out;
  for (const auto& k : basis(module)) out[weight_of(module, k)] += 1;
  return out;
}

std::vector<Weight> module_weights(const ModuleDescriptor& module) {
  std::vector<Weight> out;
  for (const auto& [w, m] : weight_multiplicities(module)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// WeightedVector

WeightedVector::WeightedVector(ModuleDescriptor module, std::map<BasisKey, Rational> terms)
    : module_(std::move(module)) {
  for (auto& [k, c] : terms) {
    if (!is_basis_key(module_, k)) throw std::invalid_argument("basis key is not valid for " + module_.shape_string());
    if (c != 0) terms_.emplace(k, c);
  }
  if (terms_.empty()) throw std::invalid_argument("zero vector: a weighted vector needs a nonzero term");
}

WeightedVector WeightedVector::from_weights(const ModuleDescriptor& module,
                                            const std::vector<std::pair<IVector, Rational>>& terms) {
  std::map<BasisKey, Rational> keyed;
  for (const auto& [w, c] : terms) {
    if (w.size() != module.ambient()) throw std::invalid_argument("weight length does not match the module");
    BasisKey key;
    switch (module.kind()) {
      case ShapeKind::Trivial:
        if (std::any_of(w.begin(), w.end(), [](long x) { return x != 0; }))
          throw std::invalid_argument("the trivial module has only the zero weight");
        break;
      case ShapeKind::Sym: key.assign(w.begin(), w.end()); break;
      case ShapeKind::Wedge:
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] == 1) key.push_back(static_cast<int>(i));
          else if (w[i] != 0) throw std::invalid_argument("not a weight of " + module.shape_string());
        }
        break;
      case ShapeKind::Tensor:
        throw std::invalid_argument("tensor modules have weight multiplicities; give basis keys");
    }
    keyed[key] += c;
  }
  return WeightedVector(module, std::move(keyed));
}

std::vector<Weight> WeightedVector::support() const {
  std::set<Weight> s;
  for (const auto& [k, c] : terms_) s.insert(weight_of(module_, k));
  return {s.begin(), s.end()};
}

LatticePolytope weight_polytope(const std::vector<Weight>& weights) {
  if (weights.empty()) throw std::invalid_argument("weight polytope of an empty support");
  std::vector<RVector> pts;
  for (const auto& w : weights) pts.push_back(w.traceless());
  return hull(pts);
}

LatticePolytope weight_polytope(const WeightedVector& v) { return weight_polytope(v.support()); }

LatticePolytope weyl_orbit_polytope(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_orbit_polytope needs a weakly decreasing weight");
  IVector c = lambda.coords();
  std::sort(c.begin(), c.end());
  std::vector<RVector> pts;
  do {
    pts.push_back(Weight(c).traceless());
  } while (std::next_permutation(c.begin(), c.end()));
  return hull(pts);
}

bool dominance_leq(const IVector& lambda, const IVector& mu) {
  const std::size_t n = std::max(lambda.size(), mu.size());
  long sl = 0, sm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sl += i < lambda.size() ? lambda[i] : 0;
    sm += i < mu.size() ? mu[i] : 0;
    if (sl > sm) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Group action

namespace {

template <class T>
void add_term(std::map<BasisKey, T>& m, const BasisKey& k, const T& c) {
  if (c == T(0)) return;
  auto [it, inserted] = m.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == T(0)) m.erase(it);
  }
}

template <class T>
T leibniz_det(const Matrix<T>& g, const BasisKey& rows, const BasisKey& cols) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  T det(0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term(1);
    for (std::size_t i = 0; i < k; ++i)
      term *= g(static_cast<std::size_t>(rows[perm[i]]), static_cast<std::size_t>(cols[i]));
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

template <class T>
std::map<BasisKey, T> basis_image(const ModuleDescriptor& module, const Matrix<T>& g, const BasisKey& key) {
  const std::size_t n1 = module.ambient();
  if (g.rows() != n1 || g.cols() != n1) throw std::invalid_argument("group element has the wrong size");
  std::map<BasisKey, T> out;
  switch (module.kind()) {
    case ShapeKind::Trivial: out.emplace(key, T(1)); break;
    case ShapeKind::Sym: {
      out.emplace(BasisKey(n1, 0), T(1));
      for (std::size_t j = 0; j < n1; ++j) {
        for (int rep = 0; rep < key[j]; ++rep) {
          std::map<BasisKey, T> next;
          for (const auto& [mono, c] : out)
            for (std::size_t i = 0; i < n1; ++i) {
              if (g(i, j) == T(0)) continue;
              BasisKey m = mono;
              m[i] += 1;
              add_term(next, m, T(c * g(i, j)));
            }
          out = std::move(next);
        }
      }
      break;
    }
    case ShapeKind::Wedge: {
      std::vector<BasisKey> targets = basis(module);
      for (const auto& rows : targets) add_term(out, rows, leibniz_det(g, rows, key));
      break;
    }
    case ShapeKind::Tensor: {
      auto parts = split_key(module, key);
      out.emplace(BasisKey{}, T(1));
      for (std::size_t f = 0; f < parts.size(); ++f) {
        auto img = basis_image(module.factors()[f], g, parts[f]);
        std::map<BasisKey, T> next;
        for (const auto& [prefix, c] : out)
          for (const auto& [k, d] : img) {
            BasisKey joined = prefix;
            joined.insert(joined.end(), k.begin(), k.end());
            add_term(next, joined, T(c * d));
          }
        out = std::move(next);
      }
      break;
    }
  }
  return out;
}

template <class T>
Matrix<T> action_matrix(const ModuleDescriptor& module, const Matrix<T>& g) {
  const auto keys = basis(module);
  std::map<BasisKey, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  Matrix<T> m(keys.size(), keys.size(), T(0));
  for (std::size_t j = 0; j < keys.size(); ++j)
    for (const auto& [k, c] : basis_image(module, g, keys[j])) m(index.at(k), j) = c;
  return m;
}

template std::map<BasisKey, Rational> basis_image(const ModuleDescriptor&, const Matrix<Rational>&, const BasisKey&);
template std::map<BasisKey, std::complex<double>> basis_image(const ModuleDescriptor&,
                                                              const Matrix<std::complex<double>>&,
                                                              const BasisKey&);
template Matrix<Rational> action_matrix(const ModuleDescriptor&, const Matrix<Rational>&);
template Matrix<std::complex<double>> action_matrix(const ModuleDescriptor&, const Matrix<std::complex<double>>&);

WeightedVector matrix_action(const RMatrix& sigma, const WeightedVector& v) {
  const auto& module = v.module();
  if (sigma.rows() != module.ambient() || sigma.cols() != module.ambient())
    throw std::invalid_argument("matrix_action: group element has the wrong size");
  if (bareiss_determinant(sigma) != 1) throw std::invalid_argument("matrix_action: determinant is not 1");
  std::map<BasisKey, Rational> out;
  for (const auto& [k, c] : v.terms())
    for (const auto& [t, d] : basis_image(module, sigma, k)) add_term(out, t, Rational(c * d));
  return WeightedVector(module, std::move(out));
}

std::vector<LatticePolytope> attainable_polytopes(const ModuleDescriptor& module, std::size_t size_cap) {
  const auto weights = module_weights(module);
  if (weights.size() > size_cap)
    throw std::invalid_argument("attainable_polytopes: module has " + std::to_string(weights.size()) +
                                " weights, above the cap " + std::to_string(size_cap));
  std::vector<RVector> pts;
  for (const auto& w : weights) pts.push_back(w.traceless());
  std::set<LatticePolytope> found;
  const std::size_t n = pts.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<RVector> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(pts[i]);
    found.insert(hull(subset));
  }
  return {found.begin(), found.end()};
}

}  // namespace sspairs
