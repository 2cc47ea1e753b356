#include "symcap/classes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "symcap/weights.hpp"

namespace symcap {

namespace {

std::vector<BigInt> parse_list(std::string_view s) {
  std::vector<BigInt> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-') throw DomainError("bad class entry '" + tok + "'");
    out.emplace_back(tok);
    tok.clear();
  };
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else tok += c;
  }
  flush();
  return out;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

void sort_desc(std::vector<BigInt>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

void ObstructionClass::normalize() {
  sort_desc(mtilde);
  sort_desc(m);
}

ObstructionClass ObstructionClass::parse(std::string_view s) {
  auto semi = s.find(';');
  if (semi == std::string_view::npos) throw DomainError("class needs 'd; mtilde | m'");
  auto bar = s.find('|', semi);
  ObstructionClass c;
  auto dl = parse_list(s.substr(0, semi));
  if (dl.size() != 1) throw DomainError("class degree must be one integer");
  c.d = dl[0];
  if (bar == std::string_view::npos) {
    c.mtilde = parse_list(s.substr(semi + 1));
  } else {
    c.mtilde = parse_list(s.substr(semi + 1, bar - semi - 1));
    c.m = parse_list(s.substr(bar + 1));
  }
  for (const auto& x : c.mtilde)
    if (x < 0) throw DomainError("class entries must be nonnegative");
  for (const auto& x : c.m)
    if (x < 0) throw DomainError("class entries must be nonnegative");
  c.normalize();
  return c;
}

std::string ObstructionClass::str() const { return d.get_str() + "; " + join(mtilde) + " | " + join(m); }

ObstructionClass QuasiPerfectClass::full() const {
  ObstructionClass c{d, mtilde, integral_weights(p, q)};
  c.normalize();
  return c;
}

bool check_diophantine(const ObstructionClass& c) {
  BigInt s = 0, sq = 0;
  for (const auto& x : c.mtilde) {
    s += x;
    sq += x * x;
  }
  for (const auto& x : c.m) {
    s += x;
    sq += x * x;
  }
  return 3 * c.d - s == 1 && c.d * c.d - sq == -1;
}

bool check_diophantine(const QuasiPerfectClass& c) {
  BigInt s = 0, sq = 0;
  for (const auto& x : c.mtilde) {
    s += x;
    sq += x * x;
  }
  return 3 * c.d - s == c.p + c.q && c.d * c.d - sq == c.p * c.q - 1;
}

std::optional<Rational> center_of(const std::vector<BigInt>& m) {
  if (m.empty() || m.back() != 1) return std::nullopt;
  std::vector<BigInt> runs;
  for (size_t i = 0; i < m.size();) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    runs.push_back(BigInt(static_cast<unsigned long>(j - i)));
    i = j;
  }
  ContinuedFraction cf{runs};
  Rational z = cf.value();
  if (z < Rational(1)) return std::nullopt;
  if (integral_weights(z.num(), z.den()) != m) return std::nullopt;
  return z;
}

Target Target::of(const WeightTuple& t) {
  Target out;
  out.b = t.b;
  out.cuts = t.cuts;
  Surd v = t.b * t.b;
  for (const auto& c : t.cuts) v -= c * c;
  out.vol = v;
  return out;
}

Target Target::ellipsoid(const Surd& alpha, size_t prefix) {
  if (alpha <= Surd(1)) throw DomainError("E(1,alpha) needs alpha > 1");
  Target out;
  out.b = alpha;
  out.vol = alpha;
  Surd r = alpha / (alpha - Surd(1));
  for (auto& w : weight_prefix(r, prefix)) {
    if (w.sign() == 0) break;
    out.cuts.push_back((alpha - Surd(1)) * w);
  }
  out.truncated = !alpha.is_rational();
  return out;
}

Surd Target::cut(size_t j) const {
  if (j < cuts.size()) return cuts[j];
  if (truncated) throw DomainError("class is longer than the available prefix of the target");
  return Surd();
}

Surd Target::dot(const std::vector<BigInt>& mtilde) const {
  Surd s;
  for (size_t j = 0; j < mtilde.size(); ++j)
    if (mtilde[j] != 0) s += Surd(mtilde[j]) * cut(j);
  return s;
}

Surd class_lambda(const ObstructionClass& c, const Target& t) { return Surd(c.d) * t.b - t.dot(c.mtilde); }

namespace {

Surd m_dot_w(const std::vector<BigInt>& m, const Surd& z) {
  auto w = weight_prefix(z, m.size());
  Surd s;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s += Surd(m[i]) * w[i];
  return s;
}

}  // namespace

Surd mu_at(const ObstructionClass& c, const Target& t, const Surd& z) {
  Surd lam = class_lambda(c, t);
  if (lam.sign() <= 0) throw DomainError("class gives no finite obstruction (d b - mtilde.b <= 0)");
  return m_dot_w(c.m, z) / lam;
}

bool above_volume(const Surd& mu, const Surd& z, const Surd& vol) {
  return mu.sign() > 0 && mu * mu * vol > z;
}

Rational break_point(const ObstructionClass& c, const Target& t) {
  if (class_lambda(c, t).sign() <= 0) throw DomainError("class gives no finite obstruction");
  if (auto ctr = center_of(c.m)) {
    if (above_volume(mu_at(c, t, Surd(*ctr)), Surd(*ctr), t.vol)) return *ctr;
  }
  const long L = std::min<long>(static_cast<long>(c.m.size()), 20);
  std::optional<Rational> best;
  long best_len = 0;
  Surd best_ratio;
  std::vector<BigInt> cf;
  std::function<void(long)> rec = [&](long used) {
    if (!cf.empty() && (cf.size() == 1 || cf.back() >= 2)) {
      Rational z = ContinuedFraction{cf}.value();
      Surd mu = mu_at(c, t, Surd(z));
      if (above_volume(mu, Surd(z), t.vol)) {
        Surd ratio = mu * mu * t.vol / Surd(z);
        if (!best || used < best_len || (used == best_len && ratio > best_ratio)) {
          best = z;
          best_len = used;
          best_ratio = ratio;
        }
      }
    }
    for (long a = 1; used + a <= L; ++a) {
      cf.push_back(BigInt(a));
      rec(used + a);
      cf.pop_back();
    }
  };
  rec(0);
  if (!best) throw DomainError("class is nowhere above the volume constraint");
  return *best;
}

bool is_obstructive(const ObstructionClass& c, const Target& t) {
  if (c.m.empty() || class_lambda(c, t).sign() <= 0) return false;
  try {
    break_point(c, t);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

bool is_live(const ObstructionClass& c, const Target& t, const std::vector<ObstructionClass>& competitors,
             const Surd& z) {
  if (class_lambda(c, t).sign() <= 0) return false;
  Surd mu = mu_at(c, t, z);
  if (!above_volume(mu, z, t.vol)) return false;
  for (const auto& o : competitors) {
    if (o == c || class_lambda(o, t).sign() <= 0) continue;
    if (mu_at(o, t, z) >= mu) return false;
  }
  return true;
}

int ErrorVector::compare_one() const { return sign_plus_sqrt(R - Surd(1), S, W); }

double ErrorVector::norm_sq() const {
  mpf_class w = to_mpf(W), r(0, 256);
  mpf_sqrt(r.get_mpf_t(), w.get_mpf_t());
  mpf_class v = to_mpf(R) + to_mpf(S) * r;
  return v.get_d();
}

ErrorVector error_vector(const ObstructionClass& c, const Target& t, const Rational& a) {
  if (a < Rational(1)) throw DomainError("error vector needs a >= 1");
  ErrorVector e;
  Surd d(c.d);
  Surd R;
  for (size_t j = 0; j < std::max(c.mtilde.size(), t.truncated ? c.mtilde.size() : t.cuts.size()); ++j) {
    Surd mj = j < c.mtilde.size() ? Surd(c.mtilde[j]) : Surd();
    Surd x = mj - d * t.cut(j) / t.b;
    e.tilde.push_back(x);
    R += x * x;
  }
  if (t.truncated) {
    // cuts past the prefix: their squares sum to b^2 - Vol minus the prefix
    Surd tail = t.b * t.b - t.vol;
    for (size_t j = 0; j < c.mtilde.size(); ++j) tail -= t.cut(j) * t.cut(j);
    R += d * d * tail / (t.b * t.b);
  }
  auto w = weight_expansion(a).entries();
  Rational ma, aa;
  for (size_t i = 0; i < std::max(w.size(), c.m.size()); ++i) {
    Rational mi = i < c.m.size() ? Rational(c.m[i]) : Rational();
    Rational ai = i < w.size() ? w[i] : Rational();
    R += Surd(mi * mi);
    ma += mi * ai;
    aa += ai * ai;
  }
  R += d * d * Surd(aa) * t.vol / (Surd(a) * t.b * t.b);
  e.R = R;
  e.S = Surd(Rational(-2) * Rational(c.d) * ma) / t.b;
  e.W = t.vol / Surd(a);
  return e;
}

Surd mu_upper_bound_sq(const BigInt& d, const Target& t, const Rational& a) {
  if (t.truncated) throw DomainError("upper bound needs a finite target");
  Surd nb;
  for (const auto& c : t.cuts) nb += c * c;
  Rational dd(BigInt(d * d));
  Surd den = t.b * t.b * Surd(dd / (dd + Rational(1))) - nb;
  if (den.sign() <= 0) throw DomainError("degenerate denominator in the upper bound");
  return Surd(a) / den;
}

namespace {

struct Normalized {
  Surd dot, nb, nm;  // mtilde.b, |b|^2, |mtilde|^2 with b scaled to 1
};

Normalized normalized(const std::vector<BigInt>& mtilde, const Target& t) {
  if (t.truncated) throw DomainError("bound needs a finite target");
  Normalized n;
  for (size_t j = 0; j < std::max(mtilde.size(), t.cuts.size()); ++j) {
    Surd bj = t.cut(j) / t.b;
    Surd mj = j < mtilde.size() ? Surd(mtilde[j]) : Surd();
    n.dot += mj * bj;
    n.nb += bj * bj;
    n.nm += mj * mj;
  }
  return n;
}

}  // namespace

bool m_bound_holds(const BigInt& d, const std::vector<BigInt>& mtilde, const Target& t) {
  auto n = normalized(mtilde, t);
  if (n.nb.sign() == 0) return true;
  Surd M = n.dot / n.nb;
  Surd gap = M - Surd(d);
  return gap * gap <= Surd(1) / n.nb - Surd(1);
}

bool nontrivial_bound_holds(const BigInt& d, const std::vector<BigInt>& mtilde, const Target& t) {
  auto n = normalized(mtilde, t);
  Surd lam = Surd(d) - n.dot;
  return lam * lam <= (Surd(1) - n.nb) * (Surd(BigInt(d * d)) - n.nm + Surd(1));
}

std::vector<ObstructionClass> enumerate_classes(const Target& t, long d_max, bool only_obstructive) {
  std::vector<ObstructionClass> out;
  const size_t ncuts = t.cuts.size();
  for (long d = 1; d <= d_max; ++d) {
    std::vector<long> mt, m;
    auto emit = [&] {
      ObstructionClass c;
      c.d = d;
      for (long x : mt) c.mtilde.emplace_back(x);
      for (long x : m) c.m.emplace_back(x);
      if (only_obstructive && !is_obstructive(c, t)) return;
      out.push_back(std::move(c));
    };
    // entries at most cap, remaining linear budget S and square budget Q
    std::function<void(long, long, long)> rec_m = [&](long cap, long S, long Q) {
      if (S == 0 && Q == 0) {
        emit();
        return;
      }
      if (S <= 0 || Q < S || Q > cap * S) return;
      for (long x = std::min(cap, S); x >= 1; --x) {
        if (x * x > Q) continue;
        m.push_back(x);
        rec_m(x, S - x, Q - x * x);
        m.pop_back();
      }
    };
    std::function<void(long, long, long)> rec_t = [&](long cap, long S, long Q) {
      rec_m(d, S, Q);
      if (mt.size() >= ncuts || S <= 0) return;
      for (long x = std::min(cap, S); x >= 1; --x) {
        if (x * x > Q) continue;
        long S2 = S - x, Q2 = Q - x * x;
        if (Q2 < S2) continue;
        mt.push_back(x);
        rec_t(x, S2, Q2);
        mt.pop_back();
      }
    };
    rec_t(d, 3 * d - 1, d * d + 1);
  }
  return out;
}

bool gromov_no_staircase(const Surd& per, const Surd& vol, const Surd& gromov_bound) {
  if (gromov_bound.sign() <= 0) throw DomainError("Gromov width bound must be positive");
  return per < gromov_bound + vol / gromov_bound && gromov_bound * gromov_bound <= vol;
}

bool gromov_no_staircase(const WeightTuple& t, const Surd& gromov_bound) {
  auto s = stats(t);
  return gromov_no_staircase(s.per, s.vol, gromov_bound);
}

}  // namespace symcap
