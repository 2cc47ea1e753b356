#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "symcap/domains.hpp"

using namespace symcap;

namespace {

RationalPolygon poly(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Point> v;
  for (const auto& [x, y] : pts) v.push_back({x, y});
  return RationalPolygon::make(v);
}

std::vector<Surd> surds(std::initializer_list<Rational> v) { return {v.begin(), v.end()}; }

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// monotone chain hull, exact
std::vector<Point> hull(std::vector<Point> p) {
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  p.erase(std::unique(p.begin(), p.end()), p.end());
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

std::vector<RationalPolygon> random_polygons(size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(0, 40), den(1, 4), npts(3, 9);
  std::vector<RationalPolygon> out;
  while (out.size() < count) {
    std::vector<Point> pts;
    long m = npts(rng);
    for (long i = 0; i < m; ++i) {
      Rational x(num(rng), den(rng)), y(num(rng), den(rng));
      if (x > Rational(10) || y > Rational(10)) continue;
      pts.push_back({x, y});
    }
    if (pts.size() < 3) continue;
    auto h = hull(pts);
    if (h.size() < 3 || h.size() > 7) continue;
    out.push_back(RationalPolygon::make(h));
  }
  return out;
}

std::multiset<BigInt> orders(const RationalPolygon& p) {
  std::multiset<BigInt> s;
  for (size_t i = 0; i < p.vertices.size(); ++i) s.insert(singularity_order(p, i));
  return s;
}

}  // namespace

TEST_CASE("weight tuple parsing and conditions") {
  auto t = WeightTuple::parse("5 : 2 2 2 2 2");
  CHECK(t.b == Surd(5));
  CHECK(t.cuts.size() == 5);
  auto u = WeightTuple::parse("2:1,1");
  CHECK(u.cuts == surds({1, 1}));
  CHECK(WeightTuple::parse("3:1,0,1").cuts.size() == 2);
  CHECK_THROWS_AS(WeightTuple::parse("1:1"), DomainError);        // sum b_j^2 < b^2
  CHECK_THROWS_AS(WeightTuple::parse("2:3/2,1"), DomainError);    // b_1 + b_2 <= b
  CHECK_THROWS_AS(WeightTuple::parse("-1"), DomainError);
  CHECK(WeightTuple::parse("1").cuts.empty());
}

TEST_CASE("cutting examples") {
  auto T1 = poly({{0, 0}, {1, 0}, {0, 1}});
  auto r = cut_decomposition(T1);
  CHECK(r.tuple.b == Surd(1));
  CHECK(r.tuple.cuts.empty());

  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  r = cut_decomposition(sq);
  CHECK(r.tuple.b == Surd(2));
  CHECK(r.tuple.cuts == surds({1, 1}));

  auto e12 = poly({{0, 0}, {2, 0}, {0, 1}});
  r = cut_decomposition(e12);
  CHECK(r.tuple.b == Surd(2));
  CHECK(r.tuple.cuts == surds({1, 1}));
}

TEST_CASE("polygon input validation") {
  CHECK_THROWS_AS(poly({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), DomainError);  // reflex vertex
  CHECK_THROWS_AS(poly({{0, 0}, {1, 1}, {2, 2}}), DomainError);
  CHECK_THROWS_AS(poly({{-1, 0}, {1, 0}, {0, 1}}), DomainError);
  // clockwise input is reoriented, collinear points dropped
  auto p = poly({{0, 0}, {0, 1}, {1, 1}, {1, 0}, {Rational(1, 2), 0}});
  CHECK(p.vertices.size() == 4);
  CHECK(p.twice_area() == Rational(2));
  auto q = RationalPolygon::parse("# square\n0 0\n1 0\n1 1\n0 1\n");
  CHECK(q.vertices.size() == 4);
  CHECK_THROWS_AS(RationalPolygon::parse("0 0\n1 x\n0 1\n"), DomainError);
}

TEST_CASE("stats examples") {
  auto b = stats(WeightTuple::parse("1"));
  CHECK(b.per == Surd(3));
  CHECK(b.vol == Surd(1));
  REQUIRE(b.a0);
  CHECK(*b.a0 == Surd::parse("7/2 + 3/2*sqrt(5)"));
  auto e = stats(WeightTuple::parse("2:1,1"));
  CHECK(e.per == Surd(4));
  CHECK(e.vol == Surd(2));
  REQUIRE(e.a0);
  CHECK(*e.a0 == Surd::parse("3 + 2*sqrt(2)"));
  CHECK_FALSE(accumulation_point(Surd(0), Surd(1)));
  CHECK_FALSE(accumulation_point(Surd(3), Surd(3)));  // Per^2 < 4 Vol
  // boundary case Per^2 = 4 Vol: a0 = 1
  auto one = accumulation_point(Surd(2), Surd(1));
  REQUIRE(one);
  CHECK(*one == Surd(1));
}

TEST_CASE("affine lengths and perimeters") {
  CHECK(affine_length({0, 0}, {3, 0}) == Rational(3));
  CHECK(affine_length({0, 1}, {2, 0}) == Rational(1));
  CHECK(affine_length({0, Rational(5, 2)}, {Rational(5, 2), 0}) == Rational(5, 2));
  CHECK(boundary_perimeter(poly({{0, 0}, {1, 0}, {0, 1}})) == Rational(3));
  CHECK(boundary_perimeter(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == Rational(4));
  CHECK(boundary_perimeter(poly({{0, 0}, {2, 0}, {0, 1}})) == Rational(4));
}

TEST_CASE("singularity orders") {
  CHECK(orders(poly({{0, 0}, {1, 0}, {0, 1}})) == std::multiset<BigInt>{1, 1, 1});
  CHECK(orders(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == std::multiset<BigInt>{1, 1, 1, 1});
  for (long n : {0, 3}) {
    auto o = orders(poly({{0, 0}, {1, 0}, {0, 2 * n + 5}}));
    CHECK(*o.rbegin() == 2 * n + 5);
  }
}

TEST_CASE("cut length lower bound") {
  CHECK(cut_length_lower_bound(1) == 0);
  CHECK(cut_length_lower_bound(8) == 0);
  CHECK(cut_length_lower_bound(9) == 2);
  CHECK(cut_length_lower_bound(32) == 2);
  CHECK(cut_length_lower_bound(33) == 3);
  CHECK(cut_length_lower_bound(72) == 3);
}

TEST_CASE("volume constraint") {
  auto ball = WeightTuple::parse("1");
  CHECK(volume_constraint(ball, Surd(1)).exact() == Surd(1));
  Surd a0 = Surd::parse("7/2 + 3/2*sqrt(5)");
  auto v = volume_constraint(ball, a0).exact();
  REQUIRE(v);
  CHECK(*v * *v == a0);
  CHECK(*v == Surd::parse("3/2 + 1/2*sqrt(5)"));
  auto e = volume_constraint(WeightTuple::parse("2:1,1"), Surd(2));
  CHECK(e.exact() == Surd(1));
  CHECK(e.compare(Surd(1)) == 0);
  CHECK(e.compare(Surd(Rational(101, 100))) == 1);
  // sqrt(3) is irrational; compare stays exact
  auto w = volume_constraint(ball, Surd(3));
  CHECK(w.compare(Surd(Rational(1732, 1000))) == -1);
  CHECK(w.compare(Surd(Rational(1733, 1000))) == 1);
}

TEST_CASE("property: cutting agrees with perimeter and area on 20 random polygons") {
  for (const auto& p : random_polygons(20, 99)) {
    auto r = cut_decomposition(p);
    auto st = stats(r.tuple);
    CHECK(st.per == Surd(boundary_perimeter(p)));
    CHECK(st.vol == Surd(p.twice_area()));
    CHECK(r.tree.check_nesting());
    auto sizes = r.tree.sizes();
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    REQUIRE(sizes.size() == r.tuple.cuts.size());
    for (size_t i = 0; i < sizes.size(); ++i) CHECK(Surd(sizes[i]) == r.tuple.cuts[i]);
  }
}

TEST_CASE("property: translation does not change the tuple") {
  for (const auto& p : random_polygons(5, 7)) {
    auto a = cut_decomposition(p).tuple;
    auto b = cut_decomposition(p.translated(Rational(3, 2), Rational(7, 3))).tuple;
    CHECK(a.b == b.b);
    CHECK(a.cuts == b.cuts);
  }
}

TEST_CASE("property: scaling law of the stats") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> n(1, 30), d(1, 30);
  auto t = WeightTuple::parse("5:2,2,1,1/2");
  auto s0 = stats(t);
  for (int i = 0; i < 30; ++i) {
    Surd lam(Rational(n(rng), d(rng)));
    auto s = stats(t.scaled(lam));
    CHECK(s.per == lam * s0.per);
    CHECK(s.vol == lam * lam * s0.vol);
    CHECK(s.a0 == s0.a0);
  }
}

TEST_CASE("property: a0 + 1/a0 = Per^2/Vol - 2") {
  for (const char* tx : {"1", "2:1,1", "5:2,2,1,1/2", "3:1,1,1,1", "7/2:3/2,1,1/3"}) {
    auto s = stats(WeightTuple::parse(tx));
    REQUIRE(s.a0);
    CHECK(*s.a0 + Surd(1) / *s.a0 == s.per * s.per / s.vol - Surd(2));
    CHECK(*s.a0 >= Surd(1));
  }
}
