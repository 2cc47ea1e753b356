#include "symcap/weights.hpp"

#include <cctype>

namespace symcap {

namespace {

void check_pq(const BigInt& p, const BigInt& q) {
  if (q < 1 || p < q) throw DomainError("need p >= q >= 1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw DomainError("p and q must be coprime");
}

Rational eval_cf(const std::vector<BigInt>& e) {
  if (e.empty()) throw DomainError("empty continued fraction");
  Rational v(e.back());
  for (size_t i = e.size() - 1; i-- > 0;) v = Rational(e[i]) + Rational(1) / v;
  return v;
}

}  // namespace

Rational ContinuedFraction::value() const { return eval_cf(entries); }

std::string ContinuedFraction::str() const {
  std::string s = "[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i == 1) s += ";";
    else if (i > 1) s += ",";
    s += entries[i].get_str();
  }
  return s + "]";
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw DomainError("unparseable continued fraction");
  s = s.substr(1, s.size() - 2);
  ContinuedFraction cf;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw DomainError("empty continued fraction entry");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad continued fraction entry " + tok);
    cf.entries.emplace_back(tok);
    tok.clear();
  };
  for (char c : s) {
    if (c == ';' || c == ',') flush();
    else tok += c;
  }
  flush();
  for (const auto& a : cf.entries)
    if (a < 1) throw DomainError("continued fraction entries must be positive");
  return cf;
}

ContinuedFraction cf_of(const BigInt& p, const BigInt& q) {
  check_pq(p, q);
  ContinuedFraction cf;
  BigInt a = p, b = q;
  while (b != 0) {
    BigInt t = floor_div(a, b);
    cf.entries.push_back(t);
    BigInt r = a - t * b;
    a = b;
    b = r;
  }
  // Euclid never ends with a trailing 1 except for p/q = 1
  return cf;
}

ContinuedFraction cf_of(const Rational& r) { return cf_of(r.num(), r.den()); }

std::vector<BigInt> cf_prefix(const Surd& z, size_t n) {
  if (z.sign() <= 0) throw DomainError("cf_prefix needs a positive value");
  std::vector<BigInt> out;
  Surd x = z;
  while (out.size() < n) {
    BigInt a = x.floor();
    out.push_back(a);
    Surd frac = x - Surd(a);
    if (frac.sign() == 0) break;
    x = Surd(1) / frac;
  }
  return out;
}

std::vector<std::pair<BigInt, BigInt>> convergents(const std::vector<BigInt>& e) {
  std::vector<std::pair<BigInt, BigInt>> out;
  BigInt p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // h_{-1}, k_{-1}, h_{-2}, k_{-2}
  for (const auto& a : e) {
    BigInt p = a * p0 + p1, q = a * q0 + q1;
    p1 = p0;
    q1 = q0;
    p0 = p;
    q0 = q;
    out.emplace_back(p, q);
  }
  return out;
}

BigInt WeightExpansion::length() const {
  BigInt n = 0;
  for (const auto& b : blocks) n += b.mult;
  return n;
}

std::vector<Rational> WeightExpansion::entries() const {
  if (length() > 10'000'000) throw DomainError("weight expansion too long to list");
  std::vector<Rational> out;
  for (const auto& b : blocks)
    for (BigInt i = 0; i < b.mult; ++i) out.push_back(b.value);
  return out;
}

Rational WeightExpansion::sum() const {
  Rational s;
  for (const auto& b : blocks) s += Rational(b.mult) * b.value;
  return s;
}

Rational WeightExpansion::sum_squares() const {
  Rational s;
  for (const auto& b : blocks) s += Rational(b.mult) * b.value * b.value;
  return s;
}

WeightExpansion weight_expansion(const BigInt& p, const BigInt& q) {
  auto cf = cf_of(p, q);
  WeightExpansion w;
  // x_{-1} = p/q, x_0 = 1, x_{i+1} = x_{i-1} - a_i x_i
  Rational prev(p, q), cur(1);
  for (const auto& a : cf.entries) {
    w.blocks.push_back({cur, a});
    Rational next = prev - Rational(a) * cur;
    prev = cur;
    cur = next;
  }
  return w;
}

WeightExpansion weight_expansion(const Rational& z) { return weight_expansion(z.num(), z.den()); }

std::vector<BigInt> integral_weights(const BigInt& p, const BigInt& q) {
  auto w = weight_expansion(p, q);
  std::vector<BigInt> out;
  for (const auto& e : w.entries()) out.push_back((e * Rational(q)).num());
  return out;
}

std::vector<Surd> weight_prefix(const Surd& z, size_t n) {
  if (z < Surd(1)) throw DomainError("weight expansion needs z >= 1");
  std::vector<Surd> out;
  out.reserve(n);
  Surd prev = z, cur(1);
  while (out.size() < n && cur.sign() > 0) {
    BigInt a = (prev / cur).floor();
    for (BigInt i = 0; i < a && out.size() < n; ++i) out.push_back(cur);
    Surd next = prev - Surd(a) * cur;
    prev = cur;
    cur = next;
  }
  while (out.size() < n) out.emplace_back();
  return out;
}

std::string AffineForm::str() const {
  if (beta.is_zero()) return alpha.str();
  std::string zt = beta == Rational(1) ? "z" : (beta == Rational(-1) ? "-z" : beta.str() + "*z");
  if (alpha.is_zero()) return zt;
  if (beta.sign() < 0) {
    std::string mag = -beta == Rational(1) ? "z" : (-beta).str() + "*z";
    return alpha.str() + " - " + mag;
  }
  return alpha.str() + " + " + zt;
}

std::vector<Rational> OneSidedForms::evaluate(const Rational& z) const {
  std::vector<Rational> out;
  for (const auto& b : blocks)
    for (BigInt i = 0; i < b.mult; ++i) out.push_back(b.form.at(z));
  return out;
}

namespace {

AffineForm sub(const AffineForm& x, const BigInt& a, const AffineForm& y) {
  return {x.alpha - Rational(a) * y.alpha, x.beta - Rational(a) * y.beta};
}

}  // namespace

LocalLinearForms local_forms(const BigInt& p, const BigInt& q) {
  auto cf = cf_of(p, q);
  const auto& e = cf.entries;
  const size_t n = e.size() - 1;
  LocalLinearForms out;
  out.p = p;
  out.q = q;
  Rational center(p, q);

  // Side A: z = [a0; ..., an, X] with X > 1.  Same block structure.
  std::vector<AffineForm> x;  // x_0 .. x_{n+1}
  AffineForm prev{Rational(0), Rational(1)}, cur{Rational(1), Rational(0)};
  OneSidedForms sideA;
  for (size_t i = 0; i <= n; ++i) {
    x.push_back(cur);
    sideA.blocks.push_back({cur, e[i]});
    AffineForm next = sub(prev, e[i], cur);
    prev = cur;
    cur = next;
  }
  x.push_back(cur);
  sideA.tail = cur;
  std::vector<BigInt> endA = e;
  endA.back() += 1;
  Rational zA = eval_cf(endA);

  // Side B: z = [a0; ..., a_{n-1}, an - 1, 1, X] with X > 1.
  std::optional<OneSidedForms> sideB;
  if (!(n == 0 && e[0] == 1)) {
    OneSidedForms s;
    for (size_t i = 0; i < n; ++i) s.blocks.push_back({x[i], e[i]});
    BigInt an1 = e[n] - 1;
    if (an1 > 0) s.blocks.push_back({x[n], an1});
    AffineForm xm1 = n == 0 ? AffineForm{Rational(0), Rational(1)} : x[n - 1];
    AffineForm y1 = sub(xm1, an1, x[n]);
    s.blocks.push_back({y1, BigInt(1)});
    s.tail = sub(x[n], BigInt(1), y1);
    std::vector<BigInt> endB(e.begin(), e.end() - 1);
    endB.push_back(an1);  // an - 1 >= 1 here
    endB.push_back(2);
    Rational zB = eval_cf(endB);
    s.lo = std::min(zB, center);
    s.hi = std::max(zB, center);
    sideB = s;
  }
  sideA.lo = std::min(zA, center);
  sideA.hi = std::max(zA, center);

  // Increasing the last partial quotient moves right exactly when n is even.
  if (zA > center) {
    out.right = sideA;
    out.left = sideB;
  } else {
    out.left = sideA;
    out.right = *sideB;
  }
  return out;
}

}  // namespace symcap
