#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcap/classes.hpp"
#include "symcap/domains.hpp"

namespace symcap {

// max over 1 <= k <= K of c_k(E(1,z)) / c_k(target)
Rational ech_lower(const WeightTuple& target, const Rational& z, size_t K);

// max(V(z), mu_E(z) over the classes with a finite obstruction)
struct ClassLower {
  Surd z, vol;
  std::optional<Surd> mu;      // best class value
  std::optional<size_t> which; // its index in the supplied list

  bool above_volume() const;
  double volume() const;  // V(z)
  double value() const;
  std::string str() const;  // exact: the class value or "sqrt(z/Vol)"
};

ClassLower class_lower(const Target& t, const Surd& z, const std::vector<ObstructionClass>& classes);

struct EmbedFnSample {
  Rational z;
  Rational ech;
  ClassLower cls;
  bool corner = false;

  double best() const;
};

struct ScanResult {
  std::vector<EmbedFnSample> samples;
  std::vector<Rational> corners;
};

// Corners are grid points where the exact one-sided slopes of the class bound
// differ and the bound lies above the volume constraint on all three samples.
ScanResult scan(const WeightTuple& target, const std::vector<Rational>& grid, size_t K, long d_max,
                unsigned jobs = 1);

struct AccumulationInput {
  Surd per, vol;
  std::optional<WeightTuple> tuple;   // enables class and ECH bounds
  std::optional<Surd> gromov;         // upper bound for the Gromov width
};

struct AccumulationReport {
  std::optional<Surd> a0;
  std::optional<Surd> v_sq;                  // a0 / Vol
  std::optional<Surd> class_bound;
  std::optional<ObstructionClass> class_best;
  std::optional<Surd> ech_bound;
  size_t ech_k = 0;
  std::optional<Surd> gromov_bound;          // 1 / gromov
  bool exceeds = false;                      // some bound is strictly above V(a0)
  std::string verdict;
};

AccumulationReport accumulation_report(const AccumulationInput& in, size_t K, long d_max);

}  // namespace symcap
