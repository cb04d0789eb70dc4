#pragma once

// Pairs of vectors (v, w) in two SL(N+1)-modules and their numerical
// semistability: 1-PS weights, the generalized Futaki character, torus
// containment tests with integer witnesses, and Popov-Vinberg characteristics.
//
// Numerical semistability asks that N(v) lie inside N(w) for every maximal
// torus. All maximal tori are conjugate to the diagonal one, so the test over
// a single conjugate pair is exact while the test over all tori is a
// semi-decision, except where an exact decider exists (binary forms).
// Nothing here decides disjointness of orbit closures.

#include "sspairs/binaryforms.hpp"
#include "sspairs/lattice.hpp"
#include "sspairs/rep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sspairs {

struct Pair {
  Pair(WeightedVector v_, WeightedVector w_);
  WeightedVector v;
  WeightedVector w;
  std::size_t ambient() const { return v.module().ambient(); }
};

/// sigma . (v, w).
Pair conjugate(const RMatrix& sigma, const Pair& p);

/// min over the support of v of <chi, u>.
long weight_1ps(const WeightedVector& v, const Cocharacter& u);
/// weight_1ps(w, u) - weight_1ps(v, u).
long futaki_gen(const Pair& p, const Cocharacter& u);

struct TorusCheck {
  bool semistable = true;
  /// When not semistable: u with futaki_gen(p, u) > 0.
  std::optional<Cocharacter> witness;
  long witness_futaki = 0;
};

/// N(v) inside N(w) for the diagonal torus, with an integer witness on failure.
TorusCheck nss_fixed_torus(const Pair& p);

enum class VerdictStatus { Unstable, NotRefuted, ProvenSemistable };

enum class NssMode {
  AllTori,         // conjugate sweep, exact deciders where available
  FixedTorusOnly,  // the diagonal torus alone, decided exactly
};

struct Verdict {
  VerdictStatus status = VerdictStatus::NotRefuted;
  std::string method;
  std::size_t tori_tested = 0;
  /// Unstable: the torus witness lives on conjugate(conjugator, p).
  std::optional<RMatrix> conjugator;
  std::optional<Cocharacter> witness;
  std::optional<long> futaki;
  /// Unstable without a rational witness: the offending root class.
  std::optional<RootClass> root_class;
};

std::string to_string(VerdictStatus s);

/// True when both vectors live in Sym(k)/Trivial modules of SL(2).
bool is_binary_form_pair(const Pair& p);
/// The binary form of a vector in Sym(k) or Trivial over SL(2).
BinaryForm to_binary_form(const WeightedVector& v);

Verdict nss_check(const Pair& p, std::size_t samples, std::uint64_t seed, NssMode mode = NssMode::AllTori);

/// Re-checks a verdict against the pair from scratch.
bool verify_verdict(const Pair& p, const Verdict& verdict);

struct Characteristic {
  RVector chi_min;            // traceless
  RVector chi_min_canonical;  // same class, last coordinate zero
  Rational squared_height;
  double height = 0;
  RVector h;                  // 2 chi_min / |chi_min|^2
  RVector h_dominant;         // h sorted descending
};

/// Popov-Vinberg data of a vector with 0 outside N(v).
Characteristic characteristic(const WeightedVector& v);

/// Support weights of v pairing with h to exactly 2.
std::vector<Weight> gamma_face(const WeightedVector& v, const RVector& h);

struct FutakiCharacter {
  /// chi_w - chi_v for representative support weights.
  Weight difference;
  /// Its value on each generator.
  std::vector<long> values;
  bool is_zero() const;
};

/// Generators e_i - e_{N+1} of the diagonal cocharacter lattice.
std::vector<Cocharacter> diagonal_torus_generators(std::size_t ambient);

/// Character of the pair on a torus that stabilizes both lines; throws
/// std::invalid_argument if some generator does not.
FutakiCharacter futaki_character_torus(const Pair& p, const std::vector<Cocharacter>& generators);

/// Same, for explicit diagonal torus elements diag(t_1..t_{N+1}); returns
/// chi_w(t) / chi_v(t) per element.
std::vector<Rational> futaki_character_torus(const Pair& p, const std::vector<RVector>& diagonal_elements);

}  // namespace sspairs
