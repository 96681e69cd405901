#include "permtwist/derivation.hpp"

#include <stdexcept>

namespace permtwist {

DerivCoeffs solve_a_coeffs(int k, int depth) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  std::vector<Rational> target;
  for (int j = 1; j <= depth; ++j) target.push_back(binomial(Rational(k), j + 1) / Rational(k));
  return {k, solve_exponent_coefficients(target, -1, Rational(0))};
}

XLaurent::XLaurent(MultiSeries<Rational> s) : s_(std::move(s)) {
  if (s_.variables() != std::vector<std::string>{"x", "z"}) throw std::invalid_argument("XLaurent needs variables (x, z)");
}

FracSeries<Rational> XLaurent::coefficient(long n) const {
  if (!x_window().contains(Rational(n)))
    throw WindowViolation("x-degree " + std::to_string(n) + " outside window " + x_window().to_string());
  FracSeries<Rational> out("z", s_.ramification()[1]);
  for (const auto& [e, c] : s_.terms())
    if (e[0] == Rational(n)) out.add_term(e[1], c);
  return out;
}

XLaurent XLaurent::pow(long n) const {
  if (n >= 0 && x_window().exact()) return XLaurent(s_.pow_nonneg(n));
  return XLaurent(s_.pow(Rational(n), 0));
}

XLaurent exp_derivation_apply(const std::vector<FracSeries<Rational>>& alpha, long n, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  int ram = 1;
  for (const auto& a : alpha) ram = static_cast<int>(lcm_long(ram, a.ramification()));
  std::vector<FracSeries<Rational>> theta;
  for (size_t j = 0; j < alpha.size() && j < static_cast<size_t>(order); ++j) theta.push_back(alpha[j]);
  FracSeries<Rational> zero("z", ram);
  auto coeffs = exp_derivation_monomial(theta, -1, n, n + order, zero);
  XLaurent out(ram, Window::upto(Rational(n + order)));
  for (size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& [e, c] : coeffs[d].terms()) out.add_term(n + static_cast<long>(d), e, c);
  return out;
}

XLaurent f_series(int k, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  XLaurent f(k);
  for (int m = 1; m <= k; ++m) f.add_term(m, Rational(1, k), binomial(Rational(k), m) / Rational(k));
  return f;
}

XLaurent f_inverse_series(int k, int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  XLaurent g(k, Window::upto(Rational(order)));
  const Rational root(1, k);
  for (int m = 1; m <= order; ++m) g.add_term(m, Rational(-m, k), binomial(root, m) * pow(Rational(k), m));
  return g;
}

XLaurent compose(const XLaurent& outer, const XLaurent& inner) {
  auto lowest = inner.series().support(0).min;
  if (lowest && *lowest < Rational(1)) throw std::invalid_argument("inner series must start at x^1");
  const int ram = static_cast<int>(lcm_long(outer.series().ramification()[1], inner.series().ramification()[1]));
  XLaurent out(ram);
  if (outer.x_window().hi) out = out.truncated(outer.x_window().hi->floor().get_si());
  auto sup = outer.series().support(0);
  if (!sup.min) return out;
  if (*sup.min < Rational(0)) throw std::invalid_argument("outer series must be a power series");
  const long top = sup.max->to_long();
  XLaurent p(inner.series().ramification()[1]);
  p.add_term(0, Rational(0), Rational(1));
  for (long m = 0; m <= top; ++m) {
    XLaurent cm(ram);
    for (const auto& [e, c] : outer.series().terms())
      if (e[0] == Rational(m)) cm.add_term(0, e[1], c);
    if (!cm.is_zero()) out = out + cm * p;
    if (m < top) p = p * inner;
  }
  return out;
}

XLaurent delta_k_x_apply(int k, long n, int order) {
  XLaurent base(k);
  for (int m = 1; m <= k; ++m) base.add_term(m, Rational(1) - Rational(m, k), binomial(Rational(k), m));
  return base.truncated(1 + order).pow(n);
}

XLaurent delta_k_x_inverse_apply(int k, long n, int order) {
  XLaurent base(k, Window::upto(Rational(1 + order)));
  const Rational root(1, k);
  for (int m = 1; m <= 1 + order; ++m) base.add_term(m, root - Rational(m), binomial(root, m));
  return base.pow(n);
}

XLaurent delta_x_derivative_residual(int k, long n, int order) {
  XLaurent dn = delta_k_x_apply(k, n, order);
  XLaurent r = Rational(1, k) * dn.d_dx().times_z(Rational(1, k) - Rational(1)) - dn.d_dz();
  if (n != 0) r = r - Rational(n) * delta_k_x_apply(k, n - 1, order);
  return r;
}

XLaurent delta_x_inverse_derivative_residual(int k, long n, int order) {
  XLaurent dn = delta_k_x_inverse_apply(k, n, order);
  XLaurent r = Rational(k) * (dn.d_dx() - dn.d_dz()).times_z(Rational(1) - Rational(1, k));
  if (n != 0) r = r - Rational(n) * delta_k_x_inverse_apply(k, n - 1, order);
  return r;
}

namespace {

// x -> (1/k) z^{1/k-1} z0.
MultiSeries<Rational> evaluate_at_z0(const XLaurent& s, int k) {
  std::vector<Window> w{Window::all(), s.x_window()};
  MultiSeries<Rational> out({"z", "z0"}, {k, 1}, w);
  const Rational shift = Rational(1, k) - Rational(1);
  for (const auto& [e, c] : s.series().terms()) {
    long m = e[0].to_long();
    out.add_term({e[1] + shift * e[0], e[0]}, c * pow(Rational(1, k), m));
  }
  return out;
}

}  // namespace

MultiSeries<Rational> theta_series(int k, int j, int order) {
  if (j < 0 || order < 0) throw std::invalid_argument("theta_series needs j, order >= 0");
  const int jj = std::max(j, 1);
  MultiSeries<Rational> w = evaluate_at_z0(f_inverse_series(k, std::max(order, 1)), k);
  w = w.restricted(1, Window::upto(Rational(order)));
  MultiSeries<Rational> x({"z", "z0"}, {k, 1});
  x.add_term({Rational(1, k) - Rational(1), Rational(1)}, Rational(1, k));

  // F(y) = f(w + z^{-1/k} y) - x, coefficientwise in y.
  std::vector<MultiSeries<Rational>> F(jj + 2, w.zero_like());
  std::vector<MultiSeries<Rational>> wp{w.constant_like(Rational(1))};
  for (int m = 1; m <= k; ++m) wp.push_back(wp.back() * w);
  for (int r = 0; r <= jj + 1; ++r) {
    for (int m = std::max(r, 1); m <= k; ++m) {
      Rational c = binomial(Rational(k), m) / Rational(k) * binomial(Rational(m), r);
      F[r] += wp[m - r].shifted({Rational(1 - r, k), Rational(0)}, c);
    }
  }
  F[0] -= x;
  if (!F[0].is_zero()) throw std::logic_error("f(f^{-1}(x)) != x inside the window");
  if (j == 0) return F[1];

  MultiSeries<Rational> inv = F[1].pow(Rational(-1), 1);
  std::vector<MultiSeries<Rational>> target;
  for (int r = 2; r <= jj + 1; ++r) target.push_back(F[r] * inv);
  auto theta = solve_exponent_coefficients(target, +1, w.zero_like());
  return theta[j - 1];
}

MultiSeries<Rational> theta_closed_form(int k, int j, int order) {
  if (j == 0)
    return binomial_expand(Rational(1) - Rational(1, k), +1, order).shifted({Rational(1, k) - Rational(1), Rational(0)});
  Rational a = solve_a_coeffs(k, j).a[j - 1];
  return (-a) * binomial_expand(Rational(-j, k), +1, order);
}

}  // namespace permtwist
