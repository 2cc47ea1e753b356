#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace symcap {

using BigInt = mpz_class;

// Raised for mathematically invalid input (bad tuple, mixed fields, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);

// n = k^2 * s with s square-free; requires n > 0.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n);

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(const BigInt& n) : v_(n) {}  // NOLINT
  Rational(const BigInt& n, const BigInt& d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  const mpq_class& get() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  BigInt floor() const { return floor_div(v_.get_num(), v_.get_den()); }
  BigInt ceil() const { return -floor_div(-v_.get_num(), v_.get_den()); }
  double to_double() const { return v_.get_d(); }

  // "p/q", "n" or a finite decimal such as "-1.25".
  static Rational parse(std::string_view s);
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& x);

// Element a + b*sqrt(sigma) of Q[sqrt(sigma)], sigma square-free.  Rationals
// carry sigma = 1 and b = 0 and mix freely with any field.
class Surd {
 public:
  Surd() : s_(1) {}
  Surd(const Rational& a) : a_(a), s_(1) {}  // NOLINT
  Surd(long n) : a_(n), s_(1) {}             // NOLINT
  Surd(int n) : a_(n), s_(1) {}              // NOLINT
  Surd(const BigInt& n) : a_(n), s_(1) {}    // NOLINT
  Surd(const Rational& a, const Rational& b, const BigInt& sigma);

  // sqrt(r) for r >= 0; always lands in some quadratic field.
  static Surd sqrt_of(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& sigma() const { return s_; }
  bool is_rational() const { return b_.is_zero(); }
  Rational to_rational() const;

  Surd conj() const;
  Rational norm() const;  // x * conj(x)
  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const;

  // "a + b*sqrt(s)" with a, b in "p/q" form; plain rationals are accepted.
  static Surd parse(std::string_view s);
  std::string str() const;

  Surd operator-() const;
  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }
  Surd& operator/=(const Surd& o) { return *this = *this / o; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.s_ == y.s_;
  }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    int c = (x - y).sign();
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational a_, b_;
  BigInt s_;
};

Surd abs(const Surd& x);
Surd pow(Surd x, unsigned k);

// Common field of two values; throws DomainError if both are irrational
// with different sigma.
BigInt common_sigma(const Surd& x, const Surd& y);

int surd_sign(const Surd& x);
Rational surd_mul_conj_identity_check(const Surd& x);

// Exact sign of u + v*sqrt(w) with w >= 0 and u, v, w in one field.
int sign_plus_sqrt(const Surd& u, const Surd& v, const Surd& w);

// Square root inside the same field (or of a rational, possibly in a new
// field); nullopt if it is not a quadratic surd.
std::optional<Surd> surd_sqrt(const Surd& x);

// High precision evaluation, used only by tests and display code.
mpf_class to_mpf(const Surd& x, unsigned bits = 256);

}  // namespace symcap
