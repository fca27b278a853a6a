#include <random>

#include "doctest.h"
#include "qsi/rational.hpp"

using qsi::Rational;

TEST_CASE("construction and canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-3, 2).denominator() == Rational(2));
  CHECK(Rational(-3, 2).numerator() == Rational(-3));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("string parsing") {
  CHECK(Rational("3/7") == Rational(3, 7));
  CHECK(Rational("-4/6") == Rational(-2, 3));
  CHECK(Rational("1.25") == Rational(5, 4));
  CHECK(Rational("-0.125") == Rational(-1, 8));
  CHECK(Rational("2.5e-3") == Rational(1, 400));
  CHECK(Rational("25e2") == Rational(2500));
  CHECK(Rational(".5") == Rational(1, 2));
  CHECK_THROWS(Rational("abc"));
  CHECK_THROWS(Rational("1/0"));
  CHECK_THROWS(Rational(""));
}

TEST_CASE("decimal conversion is exact, never float round-trip") {
  Rational r("0.1");
  CHECK(r == Rational(1, 10));
  CHECK(r.to_string() == "1/10");
}

TEST_CASE("arithmetic") {
  Rational a(2, 3), b(-5, 7);
  CHECK(a + b == Rational(-1, 21));
  CHECK(a * b == Rational(-10, 21));
  CHECK(a / b == Rational(-14, 15));
  CHECK((a - b) + b == a);
  CHECK(a.pow(3) == Rational(8, 27));
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(5, 3).floor() == Rational(1));
  CHECK(Rational(-5, 3).floor() == Rational(-2));
  CHECK_THROWS(a / Rational(0));
}

TEST_CASE("exactness property: (a+b)-b == a on random values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("perfect squares") {
  Rational root;
  CHECK(Rational(9, 4).sqrt_exact(&root));
  CHECK(root == Rational(3, 2));
  CHECK(Rational(0).sqrt_exact(&root));
  CHECK(root == Rational(0));
  CHECK_FALSE(Rational(2).sqrt_exact(&root));
  CHECK_FALSE(Rational(-4).sqrt_exact(&root));
  CHECK(Rational(10345).sqrt_exact(&root) == false);
}
