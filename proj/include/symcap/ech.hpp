#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symcap/domains.hpp"
#include "symcap/exactnum.hpp"

namespace symcap {

// c_k = unit * v[k]; integer scaled so that long sequences stay cheap.
struct CapacitySequence {
  std::string descriptor;
  Rational unit{1};
  std::vector<std::int64_t> v;

  size_t size() const { return v.size(); }
  Rational at(size_t k) const { return unit * Rational(static_cast<long>(v.at(k))); }
  std::vector<Rational> values() const;
  bool nondecreasing() const;
  CapacitySequence scaled(const Rational& lambda) const;
};

CapacitySequence ball_capacities(const Rational& a, size_t K);
CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, size_t K);
// Same merge with quadratic-surd parameters (one common field).
std::vector<Surd> ellipsoid_capacities_exact(const Surd& a, const Surd& b, size_t K);

// c_k = max over k_1 + ... + k_n = k of sum c_{k_i}, by pairwise max-plus
// merges restricted to the breakpoints of one operand.
CapacitySequence disjoint_union_capacities(const std::vector<CapacitySequence>& parts, size_t K);

// Brute force over all compositions of k; for small K only.
CapacitySequence disjoint_union_partition_oracle(const std::vector<CapacitySequence>& parts, size_t K);

// Subtraction formula for a finite rational tuple.
Rational convex_capacity(const WeightTuple& t, size_t k);
CapacitySequence convex_capacities(const WeightTuple& t, size_t K, unsigned jobs = 1);

struct LatticePoint {
  long x, y;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Omega-length of a closed convex lattice polygon given by its vertices in
// counterclockwise order (one vertex: a point, two: a doubled segment).
Rational omega_length(const RationalPolygon& omega, const std::vector<LatticePoint>& path);

// Number of lattice points enclosed by such a path.
long lattice_count(const std::vector<LatticePoint>& path);

struct DecompositionCheck {
  Rational lhs;  // omega length of the path
  Rational rhs;  // b*b' minus the concave lengths of the three corner pieces
};

// Both sides of the corner decomposition of an omega length.
DecompositionCheck omega_length_decomposition(const RationalPolygon& omega, const std::vector<LatticePoint>& path);

struct OracleResult {
  Rational value;
  std::vector<LatticePoint> minimizer;
  std::size_t visited = 0;
};

// Exhaustive minimum of omega_length over closed convex lattice polygons with
// exactly k+1 lattice points.
OracleResult lattice_path_oracle(const RationalPolygon& omega, size_t k, size_t max_k = 10);

struct SubleadingTrace {
  CapacitySequence seq;
  Surd vol;
  std::vector<double> running_min;  // running minimum of e_k, k >= 1
  std::vector<size_t> argmin;       // indices attaining the overall minimum

  double e(size_t k) const;
  // exact sign of e_k - x
  int compare(size_t k, const Rational& x) const;
};

SubleadingTrace subleading_trace(const CapacitySequence& seq, const Surd& vol);
SubleadingTrace subleading_trace(const WeightTuple& t, size_t K, unsigned jobs = 1);

}  // namespace symcap
