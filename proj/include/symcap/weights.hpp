#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcap/exactnum.hpp"

namespace symcap {

struct ContinuedFraction {
  std::vector<BigInt> entries;  // [a0; a1, ..., an]

  Rational value() const;
  std::string str() const;  // "[a0;a1,a2]"
  static ContinuedFraction parse(std::string_view s);
};

ContinuedFraction cf_of(const BigInt& p, const BigInt& q);
ContinuedFraction cf_of(const Rational& r);  // r >= 1

// First n partial quotients of a positive surd (fewer if it is rational).
std::vector<BigInt> cf_prefix(const Surd& z, size_t n);

// Convergents p_k/q_k of [a0; a1, ...].
std::vector<std::pair<BigInt, BigInt>> convergents(const std::vector<BigInt>& entries);

struct WeightBlock {
  Rational value;
  BigInt mult;
};

struct WeightExpansion {
  std::vector<WeightBlock> blocks;  // aligned with the continued fraction

  BigInt length() const;
  std::vector<Rational> entries() const;
  Rational sum() const;
  Rational sum_squares() const;
};

WeightExpansion weight_expansion(const BigInt& p, const BigInt& q);
WeightExpansion weight_expansion(const Rational& z);

// W(p,q) = q * w(p/q).
std::vector<BigInt> integral_weights(const BigInt& p, const BigInt& q);

// First n entries of w(z) for z >= 1, zero padded when z is rational and its
// expansion is shorter.
std::vector<Surd> weight_prefix(const Surd& z, size_t n);

struct AffineForm {
  Rational alpha, beta;  // alpha + beta * z

  Rational at(const Rational& z) const { return alpha + beta * z; }
  Surd at(const Surd& z) const { return Surd(alpha) + Surd(beta) * z; }
  std::string str() const;
};

struct FormBlock {
  AffineForm form;
  BigInt mult;
};

// w(z) on one side of p/q: `blocks` covers the first len(W(p,q)) entries,
// `tail` is the next entry.  Valid for z strictly between lo and hi.
struct OneSidedForms {
  Rational lo, hi;
  std::vector<FormBlock> blocks;
  AffineForm tail;

  std::vector<Rational> evaluate(const Rational& z) const;  // blocks only
};

struct LocalLinearForms {
  BigInt p, q;
  std::optional<OneSidedForms> left;  // absent for p/q = 1
  OneSidedForms right;
};

LocalLinearForms local_forms(const BigInt& p, const BigInt& q);

}  // namespace symcap
