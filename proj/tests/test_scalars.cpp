#include <random>

#include "doctest.h"
#include "permtwist/cyclotomic.hpp"
#include "permtwist/rational.hpp"

using namespace permtwist;

namespace {

Cyclotomic random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) c.emplace_back(num(rng), den(rng));
  return Cyclotomic(n, c);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS(Rational::parse("x/2"));
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(binomial(Rational(5), 2) == Rational(10));
  CHECK(binomial(Rational(-1), 3) == Rational(-1));
  CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial(Rational(1, 2), 3) == Rational(1, 16));
  CHECK(binomial(Rational(3), -1) == Rational(0));
  CHECK(binomial(Rational(2), 5) == Rational(0));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(7) == 6);
}

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(3, 2) == Cyclotomic(1));
  CHECK((Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(3, 2)).is_rational());
  CHECK(Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(4, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
  for (int n = 1; n <= 12; ++n) {
    Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    CHECK(z.pow(n) == Cyclotomic(1));
    for (int m = 1; m < n; ++m) CHECK_FALSE(z.pow(m) == Cyclotomic(1));
  }
}

TEST_CASE("field arithmetic examples") {
  CHECK(Cyclotomic(Rational(1, 2)) + Cyclotomic(Rational(1, 3)) == Cyclotomic(Rational(5, 6)));
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  // product with the claimed inverse reduces to 1 mod 1 + x + x^2
  CHECK(z3.inverse() == Cyclotomic::root_of_unity(3, 2));
  CHECK(z3 * Cyclotomic::root_of_unity(3, 2) == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic().inverse(), std::domain_error);
  // zeta_12^3 = i = zeta_4
  CHECK(Cyclotomic::root_of_unity(12, 3) == Cyclotomic::root_of_unity(4, 1));
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  // 1 + zeta_3 + zeta_3^2 = 0
  CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(12345);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Cyclotomic a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    }
  }
}

TEST_CASE("coercion compatibility") {
  std::mt19937 rng(777);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      Cyclotomic a = random_element(rng, n), b = random_element(rng, n);
      Cyclotomic low = a * b + a;
      Cyclotomic high = a.lifted(2 * n) * b.lifted(2 * n) + a.lifted(2 * n);
      CHECK(low == high);
      CHECK(low.lifted(2 * n) == high);
    }
  }
  // mixed orders lift to the lcm
  Cyclotomic m = Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(3, 1);
  CHECK(m == Cyclotomic::root_of_unity(12, 7));
}
