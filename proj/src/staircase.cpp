#include "symcap/staircase.hpp"

#include <algorithm>
#include <set>

#include "symcap/cremona.hpp"
#include "symcap/weights.hpp"

namespace symcap {

namespace {

std::vector<BigInt> padded(const std::vector<BigInt>& v, size_t n) {
  std::vector<BigInt> out = v;
  out.resize(std::max(n, v.size()), BigInt(0));
  return out;
}

Surd root_sigma(long n) { return Surd::sqrt_of(Rational((3 + 2 * n) * (7 + 2 * n))); }

}  // namespace

bool adjacent(const QuasiPerfectClass& upper, const QuasiPerfectClass& lower) {
  size_t len = std::max(upper.mtilde.size(), lower.mtilde.size());
  auto a = padded(upper.mtilde, len), b = padded(lower.mtilde, len);
  BigInt s = upper.d * lower.d;
  for (size_t j = 0; j < len; ++j) s -= a[j] * b[j];
  return s == lower.p * upper.q;
}

StaircaseFamily make_family(long n) {
  if (n < 0) throw DomainError("family index must be nonnegative");
  StaircaseFamily f;
  f.n = n;
  f.e0 = {BigInt(2), {BigInt(1), BigInt(1)}, BigInt(3), BigInt(1)};
  std::vector<BigInt> mt{BigInt(13 + 6 * n), BigInt(9 + 4 * n), BigInt(4 + 2 * n), BigInt(4 + 2 * n)};
  for (long i = 0; i < 5 + 2 * n; ++i) mt.emplace_back(1);
  f.e1 = {BigInt(22 + 10 * n), mt, BigInt(22 + 10 * n), BigInt(9 + 4 * n)};
  f.e0.mtilde = padded(f.e0.mtilde, mt.size());
  f.t = 5 + 2 * n;
  f.sigma = BigInt(f.t * f.t - 4);
  f.lambda = (Surd(f.t) + Surd(Rational(0), Rational(1), f.sigma)) / Surd(2);
  if (!adjacent(f.e0, f.e1)) throw DomainError("seeds are not adjacent");
  if (f.e0.p * f.e1.q - f.e1.p * f.e0.q != f.t) throw DomainError("seed determinant differs from t");
  return f;
}

std::vector<QuasiPerfectClass> generate_steps(const StaircaseFamily& f, size_t k_max) {
  std::vector<QuasiPerfectClass> out{f.e0};
  if (k_max >= 1) out.push_back(f.e1);
  BigInt t(f.t);
  while (out.size() <= k_max) {
    const auto& a = out[out.size() - 2];
    const auto& b = out.back();
    QuasiPerfectClass c;
    c.d = t * b.d - a.d;
    c.p = t * b.p - a.p;
    c.q = t * b.q - a.q;
    for (size_t j = 0; j < b.mtilde.size(); ++j) c.mtilde.push_back(t * b.mtilde[j] - a.mtilde[j]);
    out.push_back(std::move(c));
  }
  return out;
}

BigInt ClosedForm::at(size_t k) const {
  Surd v = X * pow(lambda, static_cast<unsigned>(k)) + X.conj() * pow(lambda.conj(), static_cast<unsigned>(k));
  Rational r = v.to_rational();
  if (!r.is_integer()) throw DomainError("closed form produced a non-integer");
  return r.num();
}

ClosedForm closed_form(const BigInt& x0, const BigInt& x1, long t) {
  if (t < 3) throw DomainError("closed form needs t >= 3");
  BigInt sigma(t * t - 4);
  Rational xp(x0, BigInt(2));
  Rational xpp(BigInt(2 * x1 - t * x0), BigInt(2 * sigma));
  ClosedForm c;
  c.t = t;
  c.X = Surd(xp, xpp, sigma);
  c.lambda = Surd(Rational(t, 2), Rational(1, 2), sigma);
  return c;
}

LimitDomain limit_domain(const StaircaseFamily& f) {
  const long n = f.n;
  LimitDomain L;
  Surd rs = root_sigma(n);
  L.beta = Surd(1) / (Surd(17 + 8 * n) + rs);
  const Surd& be = L.beta;
  std::vector<Surd> b{Surd(2 + n) * be + Surd(Rational(1, 2)), Surd(-(2 + n)) * be + Surd(Rational(1, 2)),
                      Surd(4 + 2 * n) * be, Surd(4 + 2 * n) * be};
  for (long i = 0; i < 5 + 2 * n; ++i) b.push_back(be);

  // entrywise ratio of leading closed-form coefficients
  Surd D = closed_form(f.e0.d, f.e1.d, f.t).X;
  bool match = b.size() == f.e1.mtilde.size();
  for (size_t j = 0; match && j < b.size(); ++j) {
    Surd M = closed_form(f.e0.mtilde[j], f.e1.mtilde[j], f.t).X;
    match = M / D == b[j];
  }
  L.matches_closed_forms = match;
  L.tuple = WeightTuple::make(Surd(1), b);
  Surd sb, sb2;
  for (const auto& x : b) {
    sb += x;
    sb2 += x * x;
  }
  L.vol = Surd(1) - sb2;
  L.per = Surd(3) - sb;
  Surd P = closed_form(f.e0.p, f.e1.p, f.t).X, Q = closed_form(f.e0.q, f.e1.q, f.t).X;
  L.z_inf = P / Q;
  L.v_inf = D / Q;

  const Surd N2(10 * n * n + 42 * n + 45);
  bool ok = L.vol == Surd(Rational(1, 2)) - be * be * N2;
  ok = ok && L.per == Surd(2) - be * Surd(13 + 6 * n);
  ok = ok && L.z_inf == (Surd(29 + 14 * n) + Surd(3) * rs) / (Surd(13 + 6 * n) + rs);
  ok = ok && L.v_inf == Surd(2) * (Surd(17 + 8 * n) + rs) / (Surd(13 + 6 * n) + rs);
  ok = ok && L.v_inf * L.v_inf * L.vol == L.z_inf;
  auto a0 = accumulation_point(L.per, L.vol);
  ok = ok && a0 && *a0 == L.z_inf;
  L.identities_hold = ok;
  return L;
}

std::vector<StepReport> verify_steps(const StaircaseFamily& f, size_t k_max) {
  auto steps = generate_steps(f, k_max);
  auto L = limit_domain(f);
  std::vector<StepReport> out;
  for (size_t k = 0; k < steps.size(); ++k) {
    const auto& e = steps[k];
    StepReport r;
    r.k = k;
    r.e = e;
    bool nonneg = e.d > 0 && e.q > 0 && e.p > e.q;
    for (const auto& x : e.mtilde) nonneg = nonneg && x >= 0;
    r.quasi_perfect = nonneg && check_diophantine(e);
    if (r.quasi_perfect) {
      try {
        r.perfect = is_exceptional(ClassVector::of(e.full()));
      } catch (const DomainError&) {
        r.perfect = false;
      }
    }
    r.adjacent_to_next = k + 1 >= steps.size() || adjacent(e, steps[k + 1]);
    Surd lam(e.d);
    for (size_t j = 0; j < e.mtilde.size(); ++j) lam -= Surd(e.mtilde[j]) * L.tuple.cuts.at(j);
    Rational z(e.p, e.q);
    r.v_center_sq = Surd(z) / L.vol;
    if (lam.sign() > 0) {
      r.mu_center = Surd(e.p) / lam;
      r.obstructive = Surd(e.p * e.q) * L.vol > lam * lam;
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool verify_perfect(const StaircaseFamily& f, size_t k_max) {
  for (const auto& r : verify_steps(f, k_max))
    if (!r.perfect) return false;
  return true;
}

bool verify_obstructive(const StaircaseFamily& f, size_t k_max) {
  for (const auto& r : verify_steps(f, k_max))
    if (!r.obstructive) return false;
  return true;
}

std::vector<std::pair<BigInt, BigInt>> b_centers(long n, size_t k_max) {
  const BigInt t(5 + 2 * n);
  std::pair<BigInt, BigInt> b2{BigInt(2 * n + 6), BigInt(1)};
  std::pair<BigInt, BigInt> b3{BigInt((2 * n + 7) * (2 * n + 4) + 1), BigInt(2 * n + 4)};
  std::pair<BigInt, BigInt> b1{t * b2.first - b3.first, t * b2.second - b3.second};
  std::pair<BigInt, BigInt> b0{t * b1.first - b2.first, t * b1.second - b2.second};
  std::vector<std::pair<BigInt, BigInt>> out{b0, b1, b2, b3};
  while (out.size() <= k_max) {
    const auto& a = out[out.size() - 2];
    const auto& b = out.back();
    out.push_back({t * b.first - a.first, t * b.second - a.second});
  }
  out.resize(k_max + 1);
  return out;
}

namespace {

std::vector<BigInt> b_center_cf(long n, size_t k) {
  std::vector<BigInt> cf;
  for (size_t r = 0; r < (k - 2) / 2; ++r) {
    cf.emplace_back(2 * n + 7);
    cf.emplace_back(2 * n + 3);
  }
  if (k % 2 == 0) {
    cf.emplace_back(2 * n + 6);
  } else {
    cf.emplace_back(2 * n + 7);
    cf.emplace_back(2 * n + 4);
  }
  return cf;
}

}  // namespace

std::vector<BigInt> predicted_center_cf(long n, size_t k) {
  if (k == 0) return {BigInt(3)};
  if (k == 1) return {BigInt(2), BigInt(2), BigInt(2 * n + 4)};
  std::vector<BigInt> cf{BigInt(2), BigInt(2), BigInt(2 * n + 3)};
  auto tail = b_center_cf(n, k);
  cf.insert(cf.end(), tail.begin(), tail.end());
  return cf;
}

bool matrix_relation_check(long n, size_t k_max) {
  auto f = make_family(n);
  auto steps = generate_steps(f, k_max);
  auto bc = b_centers(n, k_max);
  const BigInt s(2 * n + 5);
  for (size_t k = 0; k <= k_max; ++k) {
    const auto& [pb, qb] = bc[k];
    const auto& e = steps[k];
    if ((17 + 10 * n) * pb + 5 * qb != e.p || (7 + 4 * n) * pb + 2 * qb != e.q) return false;
    // E_k identities
    if (e.d * (5 + 2 * n) + 2 * (2 + n) * e.p - 2 * (11 + 5 * n) * e.q != 0) return false;
    std::vector<BigInt> expect{e.d - e.q, e.q, e.d - 2 * e.q, e.d - 2 * e.q};
    for (long i = 0; i < 5 + 2 * n; ++i) expect.push_back(5 * e.q - e.d - e.p);
    if (expect != e.mtilde) return false;
    if (cf_of(e.p, e.q).entries != predicted_center_cf(n, k)) return false;
    if (k == 0) continue;
    // B_k identities: integral degree and multiplicity, and the one-point Diophantine pair
    BigInt dn = (2 + n) * pb + (3 + n) * qb, mn = (1 + n) * pb + (4 + n) * qb;
    if (dn % s != 0 || mn % s != 0) return false;
    BigInt db = dn / s, mb = mn / s;
    if (3 * db - mb != pb + qb || db * db - mb * mb != pb * qb - 1) return false;
    if (k >= 2 && cf_of(pb, qb).entries != b_center_cf(n, k)) return false;
  }
  return true;
}

// ----------------------------------------------------------- overshadowing

namespace {

// positive integer multisets with the given sum and sum of squares
bool representable(long S, long Q) {
  if (S < 0 || Q < 0) return false;
  if (S == 0) return Q == 0;
  std::vector<std::set<long>> reach(S + 1);
  reach[0].insert(0);
  for (long s = 1; s <= S; ++s)
    for (long x = 1; x <= s; ++x)
      for (long q : reach[s - x])
        if (q + x * x <= Q) reach[s].insert(q + x * x);
  return reach[S].count(Q) > 0;
}

}  // namespace

OvershadowReport overshadow_search(long n) {
  if (n < 0) throw DomainError("family index must be nonnegative");
  auto f = make_family(n);
  auto L = limit_domain(f);
  Target tgt = Target::of(L.tuple);
  const auto& b = L.tuple.cuts;
  const long blk = 5 + 2 * n;
  Surd rs = root_sigma(n);
  Surd s0 = (Surd(5 + 2 * n) + rs) / Surd(10 + 4 * n);

  OvershadowReport rep;
  rep.n = n;
  for (long d = 1; d <= 18; ++d) {
    auto fc = [&](const Surd& x) {
      Surd v = Surd(d) * x;
      return std::pair<long, long>{v.floor().get_si(), v.ceil().get_si()};
    };
    auto [f1, c1] = fc(b[0]);
    auto [f2, c2] = fc(b[1]);
    auto [f3, c3] = fc(b[2]);
    auto [f4, c4] = fc(b[4]);
    std::vector<std::pair<long, long>> third{{c3, c3}, {c3, f3}, {f3, f3}};
    // small block: constant except at most one entry
    std::vector<std::pair<long, long>> fourth{{f4, 0}, {f4, 1}, {c4, blk - 1}, {c4, blk}};  // value, count of c4
    for (long m1 : {c1, f1})
      for (long m2 : {c2, f2})
        for (auto [m3, m4] : third)
          for (auto [unused, nc] : fourth) {
            (void)unused;
            ++rep.examined;
            OvershadowCandidate cand;
            cand.d = d;
            cand.mtilde = {m1, m2, m3, m4};
            for (long i = 0; i < blk; ++i) cand.mtilde.push_back(i < nc ? c4 : f4);
            std::sort(cand.mtilde.begin() + 4, cand.mtilde.end(), std::greater<>());
            long L2 = m3 + m4, K = 0;
            for (long i = 4; i < static_cast<long>(cand.mtilde.size()); ++i) K += cand.mtilde[i];
            long threeC = 2 * d - m1 - m2;
            cand.C = threeC / 3;
            std::vector<BigInt> mt;
            long sum = 0, sq = 0;
            for (long x : cand.mtilde) {
              mt.emplace_back(x);
              sum += x;
              sq += x * x;
            }
            Surd lam = Surd(d) - tgt.dot(mt);
            std::string why;
            if (threeC % 3 != 0) why = "2d - m1 - m2 not divisible by 3";
            else if (threeC < d - 2 || threeC > d + 2) why = "3C + A outside [d-2, d+2]";
            else if (cand.C * (11 + 5 * n) != (2 + n) * (m1 - m2) + (4 + 2 * n) * L2 + K) why = "second linear identity fails";
            else if (cand.C > 6) why = "C > 6";
            else if (lam.sign() <= 0) why = "lambda <= 0";
            else if (Surd(cand.C) < s0 * lam) why = "C/lambda below s0";
            else if (!m_bound_holds(BigInt(d), mt, tgt)) why = "(M-d)^2 bound fails";
            else if (!nontrivial_bound_holds(BigInt(d), mt, tgt)) why = "nontriviality bound fails";
            else if (!representable(3 * d - 1 - sum, d * d + 1 - sq)) why = "no m vector completes the Diophantine pair";
            cand.eliminated_by = why;
            (why.empty() ? rep.survivors : rep.eliminated).push_back(std::move(cand));
          }
  }
  return rep;
}

// ------------------------------------------------------------ ghost stairs

ObstructionClass ellipsoid_class(const BigInt& p, const BigInt& q) {
  if (p <= q) throw DomainError("E(p,q) needs p > q");
  ObstructionClass c;
  c.d = p;
  c.mtilde = integral_weights(p, p - q);
  c.mtilde.emplace_back(1);
  c.m = integral_weights(p, q);
  c.normalize();
  return c;
}

ObstructionClass e_prime(long k) {
  if (k < 1) throw DomainError("E' needs k >= 1");
  ObstructionClass c;
  c.d = k;
  if (k > 1) c.mtilde.emplace_back(k - 1);
  for (long i = 0; i < k - 1; ++i) c.mtilde.emplace_back(1);
  for (long i = 0; i < k + 1; ++i) c.m.emplace_back(1);
  c.normalize();
  return c;
}

GhostReport ghost_stairs(const Surd& alpha, size_t N) {
  if (alpha.is_rational()) throw DomainError("ghost stairs need an irrational alpha");
  if (alpha <= Surd(1)) throw DomainError("ghost stairs need alpha > 1");
  GhostReport rep;
  rep.alpha = alpha;
  const long k = alpha.floor().get_si();
  rep.e_prime = e_prime(k);
  auto conv = convergents(cf_prefix(alpha, N + 1));
  size_t need = rep.e_prime.mtilde.size();
  for (size_t i = 1; i <= N && i < conv.size(); ++i)
    need = std::max(need, ellipsoid_class(conv[i].first, conv[i].second).mtilde.size());
  Target tgt = Target::ellipsoid(alpha, need + 2);

  for (size_t i = 1; i <= N && i < conv.size(); ++i) {
    GhostStep st;
    st.index = i;
    st.p = conv[i].first;
    st.q = conv[i].second;
    st.cls = ellipsoid_class(st.p, st.q);
    Surd z(Rational(st.p, st.q));
    st.mu = mu_at(st.cls, tgt, z);
    st.expected = i % 2 == 1 ? z / alpha : Surd(1);
    st.matches = st.mu == st.expected;
    st.obstructive = above_volume(st.mu, z, alpha);
    Surd ep = mu_at(rep.e_prime, tgt, z);
    st.bound = ep > Surd(1) ? ep : Surd(1);
    st.overshadowed = st.mu <= st.bound;
    rep.steps.push_back(std::move(st));
  }
  bool eq = true;
  for (long j = 0; j <= 16; ++j) {
    Rational z = Rational(k) + Rational(j, 16);
    if (Surd(z) < alpha) continue;
    eq = eq && mu_at(rep.e_prime, tgt, Surd(z)) == Surd(z) / alpha;
  }
  rep.e_prime_equals_subscaling = eq;
  return rep;
}

}  // namespace symcap
