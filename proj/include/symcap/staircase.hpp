#pragma once

#include <string>
#include <vector>

#include "symcap/classes.hpp"
#include "symcap/domains.hpp"

namespace symcap {

struct StaircaseFamily {
  long n = 0;
  QuasiPerfectClass e0, e1;
  long t = 0;
  BigInt sigma;  // t^2 - 4
  Surd lambda;   // (t + sqrt(sigma)) / 2
};

// d d' - mtilde.mtilde' = p' q, where p/q > p'/q'
bool adjacent(const QuasiPerfectClass& upper, const QuasiPerfectClass& lower);

StaircaseFamily make_family(long n);

// E_0 .. E_kmax by E_{k+1} = t E_k - E_{k-1} entrywise (E_0 zero padded).
std::vector<QuasiPerfectClass> generate_steps(const StaircaseFamily& f, size_t k_max);

// x_k = X lambda^k + conj(X) conj(lambda)^k
struct ClosedForm {
  long t;
  Surd X, lambda;
  BigInt at(size_t k) const;
};

ClosedForm closed_form(const BigInt& x0, const BigInt& x1, long t);

struct LimitDomain {
  WeightTuple tuple;  // (1; B_1, ..., B_{2n+9})
  Surd beta;          // 1 / (17 + 8n + sqrt(sigma))
  Surd vol, per, z_inf, v_inf;
  bool matches_closed_forms = false;  // tuple agrees with the entrywise closed-form ratios
  bool identities_hold = false;       // the four closed expressions for Vol, Per, z_inf, V(z_inf)
};

LimitDomain limit_domain(const StaircaseFamily& f);

struct StepReport {
  size_t k = 0;
  QuasiPerfectClass e;
  bool quasi_perfect = false;
  bool perfect = false;
  bool adjacent_to_next = false;  // true for the last step
  bool obstructive = false;
  Surd mu_center;  // p / (d - mtilde.b)
  Surd v_center_sq;
};

std::vector<StepReport> verify_steps(const StaircaseFamily& f, size_t k_max);
bool verify_perfect(const StaircaseFamily& f, size_t k_max);
bool verify_obstructive(const StaircaseFamily& f, size_t k_max);

// B_k(n) centers from the same recursion, with B_2 = 2n+6 and B_3 = [2n+7; 2n+4].
std::vector<std::pair<BigInt, BigInt>> b_centers(long n, size_t k_max);
// A_n (pbar_k, qbar_k) = (p_k, q_k), the B_k and E_k identities, and both
// continued-fraction patterns, for k <= k_max.
bool matrix_relation_check(long n, size_t k_max);
// Continued fraction of the E_k(n) center predicted by the closed pattern.
std::vector<BigInt> predicted_center_cf(long n, size_t k);

struct OvershadowCandidate {
  long d;
  std::vector<long> mtilde;  // m1, m2, m3, m4, then the 2n+5 small entries
  long C;
  std::string eliminated_by;  // empty for survivors
};

struct OvershadowReport {
  long n;
  size_t examined = 0;
  std::vector<OvershadowCandidate> eliminated;
  std::vector<OvershadowCandidate> survivors;
};

OvershadowReport overshadow_search(long n);

struct GhostStep {
  size_t index;  // convergent index
  BigInt p, q;
  ObstructionClass cls;
  Surd mu;
  Surd expected;  // z/alpha for odd index, 1 for even
  bool matches = false;
  bool obstructive = false;
  Surd bound;  // max(1, mu_E'(z))
  bool overshadowed = false;
};

struct GhostReport {
  Surd alpha;
  ObstructionClass e_prime;
  std::vector<GhostStep> steps;
  bool e_prime_equals_subscaling = false;  // mu_E'(z) = z/alpha on sampled points of [alpha, ceil alpha]
};

// E(p,q) = (p; W(p,p-q), 1; W(p,q))
ObstructionClass ellipsoid_class(const BigInt& p, const BigInt& q);
// E' = (k; k-1, 1^(k-1); 1^(k+1)) for alpha in (k, k+1)
ObstructionClass e_prime(long k);

GhostReport ghost_stairs(const Surd& alpha, size_t N);

}  // namespace symcap
