#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcap/domains.hpp"
#include "symcap/exactnum.hpp"

namespace symcap {

// (d; mtilde; m), both parts kept nonincreasing.
struct ObstructionClass {
  BigInt d;
  std::vector<BigInt> mtilde;  // against the target's cuts
  std::vector<BigInt> m;       // against the weights of E(1,z)

  void normalize();  // sort both parts nonincreasing, drop zeros
  // "d; m1,m2,... | n1,n2,..."
  static ObstructionClass parse(std::string_view s);
  std::string str() const;
  friend bool operator==(const ObstructionClass&, const ObstructionClass&) = default;
};

struct QuasiPerfectClass {
  BigInt d;
  std::vector<BigInt> mtilde;
  BigInt p, q;

  ObstructionClass full() const;  // m = W(p,q)
  Rational center() const { return Rational(p, q); }
};

bool check_diophantine(const ObstructionClass& c);
bool check_diophantine(const QuasiPerfectClass& c);

// Center p/q when m is an integral weight expansion W(p,q).
std::optional<Rational> center_of(const std::vector<BigInt>& m);

// Target domain (b; b_1, b_2, ...).  For infinite tuples `cuts` is a prefix
// and `truncated` is set; the volume is always exact.
struct Target {
  Surd b{1};
  std::vector<Surd> cuts;
  Surd vol;
  bool truncated = false;

  static Target of(const WeightTuple& t);
  // E(1, alpha) as (alpha; (alpha-1) w(alpha/(alpha-1))), first `prefix` cuts.
  static Target ellipsoid(const Surd& alpha, size_t prefix);

  Surd cut(size_t j) const;  // zero past the end of a finite tuple
  Surd dot(const std::vector<BigInt>& mtilde) const;
};

// d*b - mtilde . cuts
Surd class_lambda(const ObstructionClass& c, const Target& t);

// mu_E(z) = (m . w(z)) / (d b - mtilde . b); throws when the denominator is <= 0.
Surd mu_at(const ObstructionClass& c, const Target& t, const Surd& z);

// mu > 0 and mu^2 Vol > z
bool above_volume(const Surd& mu, const Surd& z, const Surd& vol);

// Quasi-perfect centers first; otherwise the shortest-weight-length rational
// in the obstructed region.  Throws when the class obstructs nowhere.
Rational break_point(const ObstructionClass& c, const Target& t);
bool is_obstructive(const ObstructionClass& c, const Target& t);

// mu_c(z) > V(z) and mu_c(z) strictly above every competitor.
bool is_live(const ObstructionClass& c, const Target& t, const std::vector<ObstructionClass>& competitors,
             const Surd& z);

// eps.eps = R + S sqrt(W)
struct ErrorVector {
  std::vector<Surd> tilde;  // mtilde_j - d b_j / b
  Surd R, S, W;

  int compare_one() const;  // sign of eps.eps - 1
  double norm_sq() const;
};

ErrorVector error_vector(const ObstructionClass& c, const Target& t, const Rational& a);

// Square of the upper bound for mu at a for degree d (finite targets only).
Surd mu_upper_bound_sq(const BigInt& d, const Target& t, const Rational& a);

// (M - d)^2 <= 1/|b|^2 - 1 with M = mtilde.b / |b|^2, b normalized to 1.
bool m_bound_holds(const BigInt& d, const std::vector<BigInt>& mtilde, const Target& t);
// (d - mtilde.b)^2 <= (1 - |b|^2)(d^2 - |mtilde|^2 + 1), b normalized to 1.
bool nontrivial_bound_holds(const BigInt& d, const std::vector<BigInt>& mtilde, const Target& t);

// All ordered classes with 1 <= d <= d_max and mtilde no longer than the
// target's cut list.
std::vector<ObstructionClass> enumerate_classes(const Target& t, long d_max, bool only_obstructive = false);

bool gromov_no_staircase(const Surd& per, const Surd& vol, const Surd& gromov_bound);
bool gromov_no_staircase(const WeightTuple& t, const Surd& gromov_bound);

// Polydisc with its top edge replaced by a strictly convex arc.
struct FuzzyPolydisc {
  Rational b, eps, delta;  // Vol exceeds 2b + eps by delta > 0
  Surd per() const { return Surd(Rational(2) * b + Rational(1) + eps); }
  Surd vol() const { return Surd(Rational(2) * b + eps + delta); }
};

}  // namespace symcap
