#include <random>

#include "doctest.h"
#include "permtwist/series.hpp"

using namespace permtwist;

namespace {

using FS = FracSeries<Rational>;

Rational term(const MultiSeries<Rational>& s, Rational a, Rational b) { return s.coefficient({a, b}); }

// Truncation of (1+z)^{1/2} by the recurrence c_{m+1} = c_m (1/2 - m)/(m+1).
FS sqrt_one_plus(int n) {
  FS s("z", 1, Window::upto(Rational(n)));
  Rational c(1);
  for (int m = 0; m <= n; ++m) {
    s.add_term(Rational(m), c);
    c = c * (Rational(1, 2) - Rational(m)) / Rational(m + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("binomial_expand examples") {
  auto s = binomial_expand(Rational(1), +1, 3);
  CHECK(s.terms().size() == 2);
  CHECK(term(s, Rational(1), Rational(0)) == Rational(1));
  CHECK(term(s, Rational(0), Rational(1)) == Rational(1));
  CHECK(term(s, Rational(-2), Rational(3)) == Rational(0));

  auto h = binomial_expand(Rational(-1, 2), +1, 2);
  CHECK(h.terms().size() == 3);
  CHECK(term(h, Rational(-1, 2), Rational(0)) == Rational(1));
  CHECK(term(h, Rational(-3, 2), Rational(1)) == Rational(-1, 2));
  CHECK(term(h, Rational(-5, 2), Rational(2)) == Rational(3, 8));
  CHECK_THROWS_AS(h.coefficient({Rational(-7, 2), Rational(3)}), WindowViolation);
}

TEST_CASE("fractional power of 1 + 2 z^{-1/2} x") {
  // (1 + 2 z^{-1/2} x)^{1/2} - 1, in variables (z, x), x truncated at 3.
  MultiSeries<Rational> s({"z", "x"}, {2, 1}, {Window::all(), Window::upto(Rational(3))});
  s.add_term({Rational(0), Rational(0)}, Rational(1));
  s.add_term({Rational(-1, 2), Rational(1)}, Rational(2));
  auto r = s.pow(Rational(1, 2), 1);
  r.add_term({Rational(0), Rational(0)}, Rational(-1));
  CHECK(r.coefficient({Rational(0), Rational(0)}) == Rational(0));
  CHECK(r.coefficient({Rational(-1, 2), Rational(1)}) == Rational(1));
  CHECK(r.coefficient({Rational(-1), Rational(2)}) == Rational(-1, 2));
  CHECK(r.coefficient({Rational(-3, 2), Rational(3)}) == Rational(1, 2));
  CHECK(r.terms().size() == 3);
  // Oracle: squaring recovers the input through the window.
  auto back = s.pow(Rational(1, 2), 1);
  CHECK(back * back == s);
}

TEST_CASE("negative and fractional powers agree with binomial_expand") {
  for (int num : {-3, -1, 1, 2}) {
    for (int k : {1, 2, 3}) {
      Rational r(num, k);
      MultiSeries<Rational> base({"z", "z0"}, {1, 1}, {Window::all(), Window::upto(Rational(5))});
      base.add_term({Rational(1), Rational(0)}, Rational(1));
      base.add_term({Rational(0), Rational(1)}, Rational(1));
      CHECK(base.pow(r, 1) == binomial_expand(r, +1, 5));
    }
  }
}

TEST_CASE("subst_root_of_unity") {
  FS s = FS::monomial("z", 2, Rational(1, 2), Rational(1));
  auto t = s.subst_root_of_unity(1);
  CHECK(t.coefficient(Rational(1, 2)) == Cyclotomic(-1));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-12, 12), c(-9, 9);
  FS r("z", 3);
  for (int i = 0; i < 10; ++i) r.add_term(Rational(e(rng), 3), Rational(c(rng)));
  auto id = r.subst_root_of_unity(0);
  auto thrice = r.subst_root_of_unity(1);
  for (int i = 0; i < 2; ++i) {
    FracSeries<Cyclotomic> next("z", 3, thrice.window());
    for (const auto& [x, v] : thrice.terms()) {
      long m = (x * Rational(3)).to_long();
      next.add_term(x, Cyclotomic::root_of_unity(3, m) * v);
    }
    thrice = next;
  }
  CHECK(thrice.terms().size() == r.terms().size());
  for (const auto& [x, v] : r.terms()) {
    CHECK(thrice.coefficient(x) == Cyclotomic(v));
    CHECK(id.coefficient(x) == Cyclotomic(v));
  }
}

TEST_CASE("residue") {
  CHECK(FS::monomial("z", 1, Rational(-1), Rational(1)).residue() == Rational(1));
  CHECK(FS::monomial("z", 2, Rational(-1, 2), Rational(1)).residue() == Rational(0));
  FS cut("z", 1, Window::upto(Rational(-3)));
  CHECK_THROWS_AS(cut.residue(), WindowViolation);
  // (z + z0)^{-1}: the z0^0 slice has residue 1 in z.
  auto b = binomial_expand(Rational(-1), +1, 4);
  CHECK(b.coefficient({Rational(-1), Rational(0)}) == Rational(1));
}

TEST_CASE("multiply examples and window rule") {
  FS one = FS::monomial("z", 1, Rational(0), Rational(1));
  FS h = FS::monomial("z", 2, Rational(1, 2), Rational(1));
  CHECK(h * h == FS::monomial("z", 1, Rational(1), Rational(1)));
  FS a = sqrt_one_plus(6);
  CHECK(one * a == a);
  FS sq = a * a;
  CHECK(sq.window() == Window::upto(Rational(6)));
  FS expect("z", 1, Window::upto(Rational(6)));
  expect.add_term(Rational(0), Rational(1));
  expect.add_term(Rational(1), Rational(1));
  CHECK(sq == expect);
  CHECK_THROWS_AS(sq.coefficient(Rational(7)), WindowViolation);
  // Known lowest term shrinks the window of the product.
  FS shifted = a.shifted(Rational(2));
  CHECK((shifted * a).window().hi == Rational(8));
}

TEST_CASE("multiply is associative and commutative") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
  auto rnd = [&](int hi) {
    FS s("z", 2, Window::upto(Rational(hi)));
    for (int i = 0; i < 6; ++i) s.add_term(Rational(e(rng), 2), Rational(c(rng)));
    return s;
  };
  for (int t = 0; t < 10; ++t) {
    FS a = rnd(4), b = rnd(5), c3 = rnd(3);
    CHECK(a * b == b * a);
    FS l = (a * b) * c3, r = a * (b * c3);
    CHECK(l.window() == r.window());
    CHECK(l == r);
  }
}

TEST_CASE("multi-variable products respect truncation rules") {
  MultiSeries<Rational> a({"x", "y"}, {1, 1}, {Window::upto(Rational(2)), Window::all()});
  MultiSeries<Rational> b({"x", "y"}, {1, 1}, {Window::all(), Window::upto(Rational(2))});
  a.add_term({Rational(0), Rational(0)}, Rational(1));
  b.add_term({Rational(0), Rational(0)}, Rational(1));
  CHECK_THROWS_AS(a * b, std::domain_error);
}

TEST_CASE("delta identities on exponent boxes") {
  const Rational radius(4);
  for (int k : {2, 3}) {
    for (int p = 0; p < k; ++p) CHECK(delta_shift_residual(k, p, radius).is_zero());
    CHECK(delta_branch_sum_residual(k, radius).is_zero());
    CHECK(delta_fractional_residual(k, radius).is_zero());
  }
  CHECK(delta_three_term_residual(radius).is_zero());
}

TEST_CASE("delta boxes are not vacuous") {
  auto box = delta_box({"z0", "z1", "z2"}, 2, {1, 0, 2, -1, Rational(1, 2), 1, false}, Rational(4));
  CHECK(box.terms().size() > 20);
  // z2^{-1}((z1-z0)/z2)^{-1/2} d(...) has z0^1 z1^{-3/2} z2^{-1/2}... coefficient C(-1/2,1)(-1)
  auto lhs = delta_box({"z0", "z1", "z2"}, 2, {1, 0, 2, -1, Rational(-1, 2), 1, false}, Rational(4));
  CHECK(lhs.coefficient({Rational(1), Rational(-3, 2), Rational(-1, 2)}) == Rational(1, 2));
}

TEST_CASE("root of unity substitution") {
  for (int k : {2, 3})
    for (int n = -4; n <= 4; ++n) CHECK(root_substitution_residual(k, n, 5).is_zero());
}
