#include "symcap/exactnum.hpp"

#include <cctype>

namespace symcap {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n <= 0) throw DomainError("squarefree_split needs a positive integer");
  // Trial division up to the cube root leaves a cofactor with at most two
  // prime factors, which is square-free unless it is a perfect square.
  BigInt bound;
  mpz_root(bound.get_mpz_t(), n.get_mpz_t(), 3);
  if (bound > 50'000'000) throw DomainError("integer too large to certify square-freeness");
  const unsigned long lim = bound.get_ui() + 1;
  BigInt k = 1, s = 1, rest = n;
  for (unsigned long p = 2; p <= lim; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) s *= p;
  }
  if (rest > 1 && is_square(rest)) k *= isqrt(rest);
  else s *= rest;
  return {k, s};
}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw DomainError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw DomainError("empty rational");
  bool neg = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational r;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw DomainError("unparseable rational: " + s);
    r = Rational(BigInt(p), BigInt(q));
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw DomainError("unparseable rational: " + s);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    r = Rational(BigInt(ip + fp), den);
  } else {
    if (!all_digits(body)) throw DomainError("unparseable rational: " + s);
    r = Rational(BigInt(body));
  }
  return neg ? -r : r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ---------------------------------------------------------------- Surd

Surd::Surd(const Rational& a, const Rational& b, const BigInt& sigma) : a_(a), b_(b), s_(1) {
  if (sigma <= 0) throw DomainError("sigma must be positive");
  if (b_.is_zero()) return;
  auto [k, s] = squarefree_split(sigma);
  b_ *= Rational(k);
  if (s == 1) {
    a_ += b_;
    b_ = Rational();
  } else {
    s_ = s;
  }
}

Surd Surd::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of a negative number");
  if (r.is_zero()) return Surd();
  // sqrt(p/q) = sqrt(p*q)/q
  return Surd(Rational(), Rational(BigInt(1), r.den()), r.num() * r.den());
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw DomainError("value is irrational: " + str());
  return a_;
}

Surd Surd::conj() const {
  Surd r = *this;
  r.b_ = -b_;
  return r;
}

Rational Surd::norm() const { return a_ * a_ - b_ * b_ * Rational(s_); }

int Surd::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 sigma
  int c = (a_ * a_ - b_ * b_ * Rational(s_)).sign();
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

BigInt Surd::floor() const {
  if (is_rational()) return a_.floor();
  // (P + Q sqrt(s)) / R with R > 0
  BigInt R = a_.den() * b_.den();
  BigInt P = a_.num() * b_.den();
  BigInt Q = b_.num() * a_.den();
  BigInt r = isqrt(Q * Q * s_);
  if (Q > 0) return floor_div(P + r, R);
  return floor_div(P - r - 1, R);
}

BigInt Surd::ceil() const { return -((-*this).floor()); }

mpf_class to_mpf(const Surd& x, unsigned bits) {
  mpf_class a(x.a().get(), bits), b(x.b().get(), bits), s(x.sigma(), bits);
  mpf_class rt(0, bits);
  mpf_sqrt(rt.get_mpf_t(), s.get_mpf_t());
  mpf_class out(a + b * rt, bits);
  return out;
}

double Surd::to_double() const {
  if (is_rational()) return a_.to_double();
  return to_mpf(*this, 256).get_d();
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  Rational bb = abs(b_);
  std::string bs = bb == Rational(1) ? "" : bb.str() + "*";
  std::string root = "sqrt(" + s_.get_str() + ")";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bs + root;
  return a_.str() + (b_.sign() < 0 ? " - " : " + ") + bs + root;
}

Surd Surd::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Surd(Rational::parse(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) throw DomainError("unparseable surd: " + std::string(text));
  std::string rad = s.substr(pos + 5, close - pos - 5);
  if (!all_digits(rad)) throw DomainError("unparseable radicand: " + rad);
  BigInt sigma(rad);
  if (sigma <= 1) throw DomainError("radicand must be a square-free integer > 1");
  auto [k, sf] = squarefree_split(sigma);
  if (k != 1) throw DomainError("radicand is not square-free: " + rad);
  std::string prefix = s.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  size_t split = std::string::npos;
  for (size_t i = prefix.size(); i-- > 1;) {
    if ((prefix[i] == '+' || prefix[i] == '-') && prefix[i - 1] != '/') {
      split = i;
      break;
    }
  }
  Rational a;
  std::string coef = prefix;
  if (split != std::string::npos) {
    a = Rational::parse(prefix.substr(0, split));
    coef = prefix.substr(split);
  }
  Rational b;
  if (coef.empty() || coef == "+") b = Rational(1);
  else if (coef == "-") b = Rational(-1);
  else b = Rational::parse(coef[0] == '+' ? coef.substr(1) : coef);
  return Surd(a, b, sigma);
}

BigInt common_sigma(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.sigma();
  if (y.is_rational()) return x.sigma();
  if (x.sigma() != y.sigma())
    throw DomainError("mixed quadratic fields: sqrt(" + x.sigma().get_str() + ") and sqrt(" + y.sigma().get_str() + ")");
  return x.sigma();
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

namespace {

Surd make(const Rational& a, const Rational& b, const BigInt& s) {
  if (b.is_zero()) return Surd(a);
  return Surd(a, b, s);
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  BigInt s = common_sigma(x, y);
  return make(x.a_ + y.a_, x.b_ + y.b_, s);
}

Surd operator-(const Surd& x, const Surd& y) {
  BigInt s = common_sigma(x, y);
  return make(x.a_ - y.a_, x.b_ - y.b_, s);
}

Surd operator*(const Surd& x, const Surd& y) {
  BigInt s = common_sigma(x, y);
  if (x.is_rational()) return make(x.a_ * y.a_, x.a_ * y.b_, s);
  if (y.is_rational()) return make(y.a_ * x.a_, y.a_ * x.b_, s);
  return make(x.a_ * y.a_ + x.b_ * y.b_ * Rational(s), x.a_ * y.b_ + x.b_ * y.a_, s);
}

Surd operator/(const Surd& x, const Surd& y) {
  common_sigma(x, y);
  if (y.is_rational()) {
    const Rational& d = y.a_;
    if (d.is_zero()) throw DomainError("division by zero");
    return make(x.a_ / d, x.b_ / d, x.s_);
  }
  Rational n = y.norm();  // nonzero since sigma is not a square
  Surd num = x * y.conj();
  return make(num.a_ / n, num.b_ / n, num.s_ == 1 ? y.s_ : num.s_);
}

Surd abs(const Surd& x) { return x.sign() < 0 ? -x : x; }

Surd pow(Surd x, unsigned k) {
  Surd r(1);
  while (k) {
    if (k & 1u) r *= x;
    x *= x;
    k >>= 1u;
  }
  return r;
}

int surd_sign(const Surd& x) { return x.sign(); }

Rational surd_mul_conj_identity_check(const Surd& x) { return (x * x.conj()).to_rational(); }

int sign_plus_sqrt(const Surd& u, const Surd& v, const Surd& w) {
  int sw = w.sign();
  if (sw < 0) throw DomainError("sign_plus_sqrt: negative radicand");
  int su = u.sign();
  int sv = sw == 0 ? 0 : v.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // opposite signs: the larger magnitude wins
  int c = (u * u - v * v * w).sign();
  return c == 0 ? 0 : (c > 0 ? su : sv);
}

std::optional<Surd> surd_sqrt(const Surd& x) {
  int sx = x.sign();
  if (sx < 0) return std::nullopt;
  if (sx == 0) return Surd();
  if (x.is_rational()) return Surd::sqrt_of(x.a());
  // (u + v sqrt(s))^2 = x  =>  u^2 + s v^2 = a, 2uv = b
  Rational n = x.norm();
  if (n.sign() < 0 || !is_square(n.num()) || !is_square(n.den())) return std::nullopt;
  Rational rn(isqrt(n.num()), isqrt(n.den()));
  for (int sg : {1, -1}) {
    Rational u2 = (x.a() + Rational(sg) * rn) / Rational(2);
    if (u2.sign() <= 0) continue;
    if (!is_square(u2.num()) || !is_square(u2.den())) continue;
    Rational u(isqrt(u2.num()), isqrt(u2.den()));
    Rational v = x.b() / (Rational(2) * u);
    Surd cand(u, v, x.sigma());
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

}  // namespace symcap
