#include "doctest.h"
#include "permtwist/derivation.hpp"

using namespace permtwist;

namespace {

std::vector<FracSeries<Rational>> alpha_for(int k, int depth) {
  std::vector<FracSeries<Rational>> out;
  for (int j = 1; j <= depth; ++j) out.push_back(FracSeries<Rational>::monomial("z", 1, Rational(0), Rational(0)));
  auto a = solve_a_coeffs(k, depth).a;
  for (int j = 1; j <= depth; ++j) out[j - 1] = FracSeries<Rational>::monomial("z", k, Rational(-j, k), a[j - 1]);
  return out;
}

std::vector<FracSeries<Rational>> constant_alpha(const std::vector<Rational>& a) {
  std::vector<FracSeries<Rational>> out;
  for (const auto& v : a) out.push_back(FracSeries<Rational>::monomial("z", 1, Rational(0), v));
  return out;
}

// Independent forward substitution: a_j is the x^{j+1} coefficient of
// exp(-sum_{i<j} a_i x^{i+1} d/dx) x minus the target coefficient.
std::vector<Rational> a_by_forward_substitution(int k, int depth) {
  std::vector<Rational> a;
  for (int j = 1; j <= depth; ++j) {
    std::vector<Rational> trial = a;
    trial.push_back(Rational(0));
    XLaurent e = exp_derivation_apply(constant_alpha(trial), 1, j);
    Rational p = e.coefficient(j + 1).terms().coeff(Rational(0));
    a.push_back(p - binomial(Rational(k), j + 1) / Rational(k));
  }
  return a;
}

XLaurent polynomial_target(int k) {
  XLaurent t(1);
  for (int m = 1; m <= k; ++m) t.add_term(m, Rational(0), binomial(Rational(k), m) / Rational(k));
  return t;
}

}  // namespace

TEST_CASE("a_j closed forms") {
  for (int k = 1; k <= 6; ++k) {
    auto c = solve_a_coeffs(k, 2);
    CHECK(c.a[0] == Rational(1 - k, 2));
    CHECK(c.a[1] == Rational(k * k - 1, 12));
  }
  auto one = solve_a_coeffs(1, 5);
  for (const auto& v : one.a) CHECK(v.is_zero());
  auto two = solve_a_coeffs(2, 2);
  CHECK(two.a[0] == Rational(-1, 2));
  CHECK(two.a[1] == Rational(1, 4));
}

TEST_CASE("a_j agree with forward substitution and reproduce the target") {
  for (int k = 2; k <= 4; ++k) {
    auto a = solve_a_coeffs(k, 6).a;
    CHECK(a == a_by_forward_substitution(k, 6));
    XLaurent e = exp_derivation_apply(constant_alpha(a), 1, 6);
    CHECK(e == polynomial_target(k));
  }
}

TEST_CASE("perturbing a_j breaks the defining equation at x^{j+1}") {
  const int k = 3;
  auto a = solve_a_coeffs(k, 5).a;
  for (int j = 1; j <= 5; ++j) {
    auto b = a;
    b[j - 1] += Rational(1);
    XLaurent e = exp_derivation_apply(constant_alpha(b), 1, 5) - polynomial_target(k);
    for (int d = 1; d <= j; ++d) CHECK(e.coefficient(d).is_zero());
    CHECK_FALSE(e.coefficient(j + 1).is_zero());
  }
}

TEST_CASE("exp_derivation_apply examples") {
  std::vector<FracSeries<Rational>> zero_alpha = constant_alpha({Rational(0), Rational(0), Rational(0)});
  XLaurent id = exp_derivation_apply(zero_alpha, -2, 3);
  XLaurent xm2(1);
  xm2.add_term(-2, Rational(0), Rational(1));
  CHECK(id == xm2);
  // n = 2 equals the square of n = 1.
  for (int k : {2, 3}) {
    auto a = constant_alpha(solve_a_coeffs(k, 6).a);
    XLaurent one = exp_derivation_apply(a, 1, 6);
    XLaurent two = exp_derivation_apply(a, 2, 6);
    CHECK(two == one * one);
    CHECK(exp_derivation_apply(a, 0, 6) == exp_derivation_apply(zero_alpha, 0, 6));
  }
}

TEST_CASE("f and its compositional inverse") {
  XLaurent f1 = f_series(1, 4);
  XLaurent expect(1);
  expect.add_term(1, Rational(1), Rational(1));
  CHECK(f1 == expect);
  XLaurent g1 = f_inverse_series(1, 4), expect_inv(1);
  expect_inv.add_term(1, Rational(-1), Rational(1));
  CHECK(g1 == expect_inv);

  XLaurent f2 = f_series(2, 4), e2(2);
  e2.add_term(1, Rational(1, 2), Rational(1));
  e2.add_term(2, Rational(1, 2), Rational(1, 2));
  CHECK(f2 == e2);

  XLaurent g2 = f_inverse_series(2, 3);
  CHECK(g2.coefficient(1) == FracSeries<Rational>::monomial("z", 2, Rational(-1, 2), Rational(1)));
  CHECK(g2.coefficient(2) == FracSeries<Rational>::monomial("z", 2, Rational(-1), Rational(-1, 2)));
  CHECK(g2.coefficient(3) == FracSeries<Rational>::monomial("z", 2, Rational(-3, 2), Rational(1, 2)));

  for (int k : {2, 3}) {
    XLaurent x(1);
    x.add_term(1, Rational(0), Rational(1));
    XLaurent fg = compose(f_series(k, 6), f_inverse_series(k, 6));
    XLaurent gf = compose(f_inverse_series(k, 6), f_series(k, 6));
    CHECK(fg.x_window().hi == Rational(6));
    CHECK(fg == x);
    CHECK(gf == x);
  }
}

TEST_CASE("f^{-1} matches the exponential form z^{-1/k} exp(sum a_j z^{-j/k} x^{j+1} d/dx) x") {
  for (int k : {2, 3}) {
    auto a = alpha_for(k, 6);
    for (auto& s : a) s = Rational(-1) * s;
    XLaurent e = exp_derivation_apply(a, 1, 5).times_z(Rational(-1, k));
    CHECK(e == f_inverse_series(k, 6));
  }
}

TEST_CASE("delta_k_x_apply against the operator-product definition") {
  for (int k : {1, 2, 3}) {
    auto alpha = alpha_for(k, 8);
    for (long n = -3; n <= 3; ++n) {
      // exp(-sum a_j z^{-j/k} x^{j+1} d/dx) k^{L0} z^{(1-1/k) L0} x^n
      XLaurent oracle = exp_derivation_apply(alpha, n, 6).times_z(Rational(n) * (Rational(1) - Rational(1, k)),
                                                                 pow(Rational(k), n));
      XLaurent got = delta_k_x_apply(k, n, 6);
      CHECK(got.x_window() == Window::upto(Rational(n + 6)));
      CHECK(got == oracle);
    }
  }
  XLaurent k1 = delta_k_x_apply(1, 2, 4), x2(1);
  x2.add_term(2, Rational(0), Rational(1));
  CHECK(k1 == x2);
  XLaurent k2 = delta_k_x_apply(2, 1, 4), e(2);
  e.add_term(1, Rational(1, 2), Rational(2));
  e.add_term(2, Rational(0), Rational(1));
  CHECK(k2 == e);
  // n = -1 inverts n = 1.
  XLaurent inv = delta_k_x_apply(2, -1, 4);
  XLaurent one(1);
  one.add_term(0, Rational(0), Rational(1));
  CHECK(inv * k2 == one);
}

TEST_CASE("inverse operator undoes delta_k_x_apply") {
  for (int k : {2, 3}) {
    XLaurent d = delta_k_x_apply(k, 1, 6);
    XLaurent x(1);
    x.add_term(1, Rational(0), Rational(1));
    CHECK(compose(d, delta_k_x_inverse_apply(k, 1, 6)) == x);
    CHECK(compose(delta_k_x_inverse_apply(k, 1, 6), d.truncated(7)) == x);
  }
}

TEST_CASE("first-order identities of Delta_k^x") {
  for (int k : {2, 3})
    for (long n = -3; n <= 3; ++n) {
      XLaurent r = delta_x_derivative_residual(k, n, 6);
      CHECK(r.is_zero());
      CHECK(r.x_window().hi >= Rational(n + 4));
      CHECK(delta_x_inverse_derivative_residual(k, n, 6).is_zero());
    }
}

TEST_CASE("theta series") {
  for (int j = 1; j <= 3; ++j) CHECK(theta_series(1, j, 4).is_zero());
  auto t1 = theta_series(2, 1, 4);
  CHECK(t1.coefficient({Rational(-1, 2), Rational(0)}) == Rational(1, 2));
  CHECK(t1.coefficient({Rational(-3, 2), Rational(1)}) == Rational(-1, 4));
  auto e0 = theta_series(2, 0, 4);
  CHECK(e0.coefficient({Rational(0), Rational(0)}) == Rational(1));
  CHECK(e0.coefficient({Rational(-1), Rational(1)}) == Rational(1, 2));
  for (int k : {2, 3})
    for (int j = 0; j <= 4; ++j) {
      auto got = theta_series(k, j, 6);
      CHECK(got.windows()[1] == Window::upto(Rational(6)));
      CHECK(got == theta_closed_form(k, j, 6));
      // No stray exponents: every z0^m term sits at the predicted z-power.
      for (const auto& [e, c] : got.terms()) {
        Rational base = j == 0 ? Rational(0) : Rational(-j, k);
        CHECK(e[0] == base - e[1]);
      }
    }
}
