#include <doctest.h>

#include <algorithm>
#include <random>

#include "symcap/cremona.hpp"
#include "symcap/staircase.hpp"

using namespace symcap;

namespace {

ClassVector V(long d, std::initializer_list<long> n) { return {d, {n.begin(), n.end()}}; }

std::vector<BigInt> sorted_nonzero(std::vector<BigInt> v) {
  std::erase(v, BigInt(0));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("tuple moves along the example chain") {
  auto a = WeightTuple::parse("5:2,2,2,2,2");
  auto b = cremona_move_tuple(a);
  CHECK(b.str() == WeightTuple::parse("4:2,2,1,1,1").str());
  auto c = cremona_move_tuple(b);
  CHECK(c.str() == WeightTuple::parse("3:1,1,1,1").str());
  CHECK(is_reduced(c));
  CHECK(cremona_move_tuple(c).str() == c.str());
  auto chain = cremona_chain(a);
  CHECK(chain.size() == 3);
}

TEST_CASE("class moves") {
  CHECK(class_move(V(1, {1, 1, 0}), 0, 1, 2) == V(0, {0, 0, -1}));
  CHECK_THROWS_AS(class_move(V(1, {1, 1, 0}), 0, 0, 2), DomainError);
  CHECK_THROWS_AS(class_move(V(1, {1, 1, 0}), 0, 1, 3), DomainError);
  // E(5,2) moved at its two largest mtilde entries and largest m entry is E(3,2)
  auto v = ClassVector::of(ellipsoid_class(5, 2));
  auto w = class_move(v, 0, 1, 5);
  auto e32 = ClassVector::of(ellipsoid_class(3, 2));
  CHECK(w.d == e32.d);
  CHECK(sorted_nonzero(w.n) == sorted_nonzero(e32.n));
}

TEST_CASE("property: moves are involutions and keep both invariants") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> e(-5, 12), len(3, 9);
  for (int it = 0; it < 1000; ++it) {
    ClassVector v;
    v.d = e(rng);
    long n = len(rng);
    for (long i = 0; i < n; ++i) v.n.emplace_back(e(rng));
    std::uniform_int_distribution<size_t> idx(0, size_t(n - 1));
    size_t i = idx(rng), j = idx(rng), k = idx(rng);
    if (i == j || j == k || i == k) continue;
    auto w = class_move(v, i, j, k);
    CHECK(w.linear() == v.linear());
    CHECK(w.self_intersection() == v.self_intersection());
    if (it < 50) CHECK(class_move(w, i, j, k) == v);
  }
}

TEST_CASE("exceptional classes") {
  auto t = reduce_class(V(1, {1, 1}));
  CHECK(t.exceptional);
  CHECK(is_exceptional(V(22, {13, 9, 4, 4, 1, 1, 1, 1, 1, 9, 9, 4, 4, 1, 1, 1, 1})));
  CHECK(is_exceptional(ClassVector::of(ellipsoid_class(22, 9))));
  CHECK_THROWS_AS(reduce_class(V(2, {2, 1})), DomainError);
  // (0; -1) itself
  CHECK(is_exceptional(V(0, {-1})));
  CHECK(is_exceptional(V(3, {2, 1, 1, 1, 1, 1, 1})));
  // Diophantine, but it pairs to -1 with the exceptional class L - E1 - E2
  auto bad = reduce_class(V(5, {3, 3, 1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(bad.exceptional);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("property: traces replay to the recorded endpoint") {
  for (long n = 0; n <= 3; ++n)
    for (const auto& e : generate_steps(make_family(n), 4)) {
      auto v = ClassVector::of(e.full());
      auto tr = reduce_class(v);
      CHECK(tr.exceptional);
      CHECK(v.linear() == 1);
      CHECK(v.self_intersection() == -1);
      CHECK(replay(v, tr) == tr.terminal);
      CHECK(tr.json().front() == '[');
    }
}

TEST_CASE("capacity invariance along the chain") {
  auto a = WeightTuple::parse("5:2,2,2,2,2");
  auto b = WeightTuple::parse("4:2,2,1,1,1");
  auto c = WeightTuple::parse("3:1,1,1,1");
  CHECK(capacity_invariance_check(a, b, 500));
  CHECK(capacity_invariance_check(b, c, 500));
  CHECK(capacity_invariance_check(a, a, 500));
  CHECK_FALSE(capacity_invariance_check(a, WeightTuple::parse("5:2,2,2,2,1"), 50));
}

TEST_CASE("Cremona length") {
  CHECK(cremona_length_upper(limit_domain(make_family(0)).tuple) == 8);
  CHECK(cremona_length_upper(WeightTuple::parse("3:1,1,1,1")) == 4);
  CHECK(cremona_length_upper(WeightTuple::parse("5:2,2,2,2,2")) == 4);
}
