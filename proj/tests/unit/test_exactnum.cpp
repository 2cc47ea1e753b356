#include <doctest.h>

#include <random>

#include "symcap/exactnum.hpp"

using namespace symcap;

TEST_CASE("surd sign examples") {
  CHECK(Surd(Rational(0), Rational(0), 5).sign() == 0);
  CHECK(Surd(Rational(3), Rational(-1), 5).sign() == 1);
  CHECK(Surd(Rational(-7), Rational(3), 5).sign() == -1);
}

TEST_CASE("norm and conjugation") {
  Surd lambda(Rational(5, 2), Rational(1, 2), 21);
  CHECK(lambda.norm() == Rational(1));
  CHECK(lambda * lambda.conj() == Surd(1));
  CHECK(Surd(2).norm() == Rational(4));
  CHECK(Surd(Rational(1), Rational(1), 2).norm() == Rational(-1));
}

TEST_CASE("sigma is canonicalized") {
  Surd x = Surd::sqrt_of(Rational(8));
  CHECK(x.sigma() == 2);
  CHECK(x.b() == Rational(2));
  CHECK(Surd::sqrt_of(Rational(9, 4)) == Surd(Rational(3, 2)));
  CHECK_THROWS_AS(Surd::parse("1 + sqrt(8)"), DomainError);
  CHECK_THROWS_AS(Surd::parse("sqrt(1)"), DomainError);
}

TEST_CASE("mixed fields are rejected") {
  Surd a = Surd::sqrt_of(Rational(2)), b = Surd::sqrt_of(Rational(3));
  CHECK_THROWS_AS(a + b, DomainError);
  CHECK_NOTHROW(a + Surd(Rational(1, 3)));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-1.25") == Rational(-5, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("surd text round trip") {
  for (const char* s : {"7/2 + 3/2*sqrt(5)", "-sqrt(2)", "1 - 2*sqrt(3)", "5/3"}) {
    Surd x = Surd::parse(s);
    CHECK(Surd::parse(x.str()) == x);
  }
  CHECK(Surd::parse("3+2*sqrt(2)") == Surd(Rational(3), Rational(2), 2));
}

TEST_CASE("property: surd comparison agrees with 200-bit evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60);
  const long sigmas[] = {2, 3, 5, 6, 7, 21, 117};
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    long s = sigmas[i % 7];
    Surd x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), s);
    Surd y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), s);
    mpf_class d = to_mpf(x, 200) - to_mpf(y, 200);
    int fs = sgn(d);
    if (abs(d) < mpf_class(1e-40, 200)) continue;
    CHECK((x - y).sign() == fs);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("property: (a + b sqrt s)(a - b sqrt s) = a^2 - b^2 s") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 300; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    Surd x(a, b, 13);
    CHECK(surd_mul_conj_identity_check(x) == a * a - b * b * Rational(13));
  }
}

TEST_CASE("property: rational string round trip") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("floor, sqrt and sign_plus_sqrt") {
  Surd tau4 = Surd::parse("7/2 + 3/2*sqrt(5)");
  CHECK(tau4.floor() == 6);
  CHECK(tau4.ceil() == 7);
  CHECK((-tau4).floor() == -7);
  auto r = surd_sqrt(tau4);
  REQUIRE(r);
  CHECK(*r * *r == tau4);
  CHECK(*r == Surd::parse("3/2 + 1/2*sqrt(5)"));
  CHECK_FALSE(surd_sqrt(Surd::parse("1 + sqrt(2)")));
  // 2 - sqrt(3) > 0, 1 - sqrt(2) < 0, 3 - sqrt(9) = 0
  CHECK(sign_plus_sqrt(Surd(2), Surd(-1), Surd(3)) == 1);
  CHECK(sign_plus_sqrt(Surd(1), Surd(-1), Surd(2)) == -1);
  CHECK(sign_plus_sqrt(Surd(3), Surd(-1), Surd(9)) == 0);
}

TEST_CASE("integer helpers") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(isqrt(BigInt(99)) == 9);
  CHECK(is_square(BigInt(144)));
  auto [k, s] = squarefree_split(BigInt(72));
  CHECK(k == 6);
  CHECK(s == 2);
}
