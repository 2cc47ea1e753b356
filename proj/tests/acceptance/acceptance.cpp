// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "symcap/capacityfn.hpp"
#include "symcap/classes.hpp"
#include "symcap/cremona.hpp"
#include "symcap/domains.hpp"
#include "symcap/ech.hpp"
#include "symcap/staircase.hpp"
#include "symcap/weights.hpp"

using namespace symcap;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome weight_identities() {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> qd(1, 1000);
  int done = 0;
  while (done < 500) {
    long q = qd(rng);
    long p = std::uniform_int_distribution<long>(q, 50 * q)(rng);
    if (std::gcd(p, q) != 1) continue;
    ++done;
    auto we = weight_expansion(p, q);
    Rational z(p, q);
    if (we.sum() != z + Rational(1) - Rational(1, q) || we.sum_squares() != z)
      return {false, "identity fails at " + z.str()};
  }
  auto W = integral_weights(22, 9);
  if (W != std::vector<BigInt>{9, 9, 4, 4, 1, 1, 1, 1}) return {false, "W(22,9) wrong"};
  return {true, "500 pairs, W(22,9) = 9,9,4,4,1,1,1,1"};
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point> hull(std::vector<Point> p) {
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Point> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]).sign() <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]).sign() <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

Outcome cutting() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, 60), den(1, 6), npts(3, 10);
  int done = 0;
  while (done < 20) {
    std::vector<Point> pts;
    for (long i = 0, m = npts(rng); i < m; ++i) {
      Rational x(num(rng), den(rng)), y(num(rng), den(rng));
      if (x <= Rational(10) && y <= Rational(10)) pts.push_back({x, y});
    }
    auto h = hull(pts);
    if (h.size() < 3 || h.size() > 7) continue;
    auto poly = RationalPolygon::make(h);
    ++done;
    auto st = stats(cut_decomposition(poly).tuple);
    if (st.per != Surd(boundary_perimeter(poly)) || st.vol != Surd(poly.twice_area()))
      return {false, "mismatch on polygon " + std::to_string(done)};
  }
  return {true, "20 polygons"};
}

Outcome ball_ellipsoid() {
  const size_t K = 10000;
  auto b = ball_capacities(Rational(1), K);
  long d = 0;
  for (size_t k = 0; k <= K; ++k) {
    while ((d * d + 3 * d) / 2 < long(k)) ++d;
    if (b.at(k) != Rational(d)) return {false, "ball differs at k=" + std::to_string(k)};
  }
  auto b1 = ball_capacities(Rational(1), 1000);
  auto u = disjoint_union_capacities({b1, b1}, 1000);
  auto e = ellipsoid_capacities(Rational(1), Rational(2), 1000);
  if (u.values() != e.values()) return {false, "two balls differ from E(1,2)"};
  return {true, "ball k <= 10^4, union k <= 10^3"};
}

Outcome subtraction_oracle() {
  auto t = WeightTuple::parse("3:1,1");
  auto omega = RationalPolygon::make({{1, 1}, {3, 1}, {3, 2}, {2, 3}, {1, 3}});
  for (size_t k = 0; k <= 6; ++k) {
    auto r = lattice_path_oracle(omega, k);
    if (r.value != convex_capacity(t, k))
      return {false, "k=" + std::to_string(k) + ": oracle " + r.value.str() + " vs " + convex_capacity(t, k).str()};
  }
  return {true, "(3;1,1) k <= 6"};
}

Outcome subleading() {
  auto ball = subleading_trace(WeightTuple::parse("1"), 20000);
  double mn = ball.running_min.back();
  bool at_tri = !ball.argmin.empty();
  for (size_t k : ball.argmin) {
    long n = 0;
    while ((n * n + 3 * n) / 2 < long(k)) ++n;
    at_tri = at_tri && (n * n + 3 * n) / 2 == long(k);
  }
  size_t kmin = ball.argmin.empty() ? 0 : ball.argmin.front();
  bool exact = kmin > 0 && ball.compare(kmin, Rational(-3, 2)) == 0;
  double mx = -1e9;
  for (size_t k = 10000; k <= 20000; ++k) mx = std::max(mx, ball.e(k));
  auto e12 = subleading_trace(WeightTuple::parse("2:1,1"), 20000, 4);
  double m2 = e12.running_min.back();
  bool ok = exact && at_tri && std::abs(mx + 0.5) < 0.01 && std::abs(m2 + 2.0) < 0.02;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "ball min %.9f at k=%zu (triangular %s, equals -3/2 exactly: %s), max on [1e4,2e4] %.6f; "
                "(2;1,1) min %.6f",
                mn, kmin, at_tri ? "yes" : "no", exact ? "yes" : "no", mx, m2);
  return {ok, buf};
}

Outcome cremona_invariance() {
  auto a = WeightTuple::parse("5:2,2,2,2,2"), b = WeightTuple::parse("4:2,2,1,1,1"),
       c = WeightTuple::parse("3:1,1,1,1");
  bool ok = capacity_invariance_check(a, b, 500) && capacity_invariance_check(b, c, 500);
  return {ok, "k <= 500"};
}

Outcome accumulation_points() {
  auto b = stats(WeightTuple::parse("1")), e = stats(WeightTuple::parse("2:1,1"));
  if (!b.a0 || *b.a0 != Surd::parse("7/2 + 3/2*sqrt(5)")) return {false, "ball a0"};
  if (!e.a0 || *e.a0 != Surd::parse("3 + 2*sqrt(2)")) return {false, "E(1,2) a0"};
  for (const auto& s : {b, e})
    if (*s.a0 + Surd(1) / *s.a0 != s.per * s.per / s.vol - Surd(2)) return {false, "a0 + 1/a0 identity"};
  return {true, "ball " + b.a0->str() + ", E(1,2) " + e.a0->str()};
}

Outcome staircase_family() {
  for (long n : {3L, 5L}) {
    auto f = make_family(n);
    auto rep = verify_steps(f, 12);
    auto L = limit_domain(f);
    for (const auto& r : rep) {
      if (!r.quasi_perfect || !r.perfect || !r.adjacent_to_next || !r.obstructive)
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(r.k)};
      if (r.k > 0 && !(r.e.center() < rep[r.k - 1].e.center())) return {false, "centers not decreasing"};
    }
    if (std::abs(rep[12].e.center().to_double() - L.z_inf.to_double()) >= 1e-6) return {false, "not converged"};
  }
  return {true, "n in {3,5}, k <= 12"};
}

Outcome overshadow() {
  auto r = overshadow_search(3);
  return {r.survivors.empty(), std::to_string(r.examined) + " candidates, " + std::to_string(r.survivors.size()) +
                                   " survivors"};
}

Outcome ghost() {
  auto rep = ghost_stairs(Surd::parse("1 + sqrt(2)"), 6);
  if (rep.steps.size() != 6) return {false, "wrong step count"};
  for (const auto& s : rep.steps)
    if (!s.matches || !(s.mu <= s.bound)) return {false, "step " + std::to_string(s.index)};
  return {true, "n = 1..6 overshadowed by E'"};
}

Outcome gromov() {
  bool ok = true;
  for (long b = 1; b <= 4; ++b) {
    FuzzyPolydisc fp{Rational(b), Rational(1, 10), Rational(1, 20)};
    ok = ok && gromov_no_staircase(fp.per(), fp.vol(), Surd(1));
  }
  ok = ok && !gromov_no_staircase(WeightTuple::parse("1"), Surd(1)) &&
       !gromov_no_staircase(WeightTuple::parse("2:1,1"), Surd(1));
  return {ok, "fuzzy polydiscs b = 1..4, ball, E(1,2)"};
}

Outcome below_a0() {
  auto ball = WeightTuple::parse("1");
  Target t = Target::of(ball);
  auto classes = enumerate_classes(t, 8);
  int hits = 0;
  for (long i = 0; i < 50; ++i) {
    Rational z = Rational(1) + Rational(117, 1000) * Rational(i);
    if (class_lower(t, Surd(z), classes).above_volume()) ++hits;
  }
  return {hits >= 45, std::to_string(hits) + " of 50 grid points"};
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> crit{weight_identities, cutting,          ball_ellipsoid, subtraction_oracle,
                                             subleading,        cremona_invariance, accumulation_points,
                                             staircase_family,  overshadow,       ghost,          gromov,
                                             below_a0};
  int failed = 0;
  for (size_t i = 0; i < crit.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = crit[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %zu: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, o.detail.c_str(), s);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
