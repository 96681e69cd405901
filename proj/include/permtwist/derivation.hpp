#pragma once

#include <vector>

#include "permtwist/series.hpp"

namespace permtwist {

inline Rational one_like(const Rational&) { return Rational(1); }
template <class S>
MultiSeries<S> one_like(const MultiSeries<S>& z) {
  return z.constant_like(S(1));
}
template <class S>
FracSeries<S> one_like(const FracSeries<S>& z) {
  return FracSeries<S>::monomial(z.variable(), z.ramification(), Rational(0), S(1));
}

// Coefficients of y^n, ..., y^top of exp(sign * sum_j theta[j-1] y^{j+1} d/dy) y^n
// over a commutative ring R (Rational or a series type). The exponential is
// summed degreewise; each application raises the degree, so it terminates.
template <class R>
std::vector<R> exp_derivation_monomial(const std::vector<R>& theta, int sign, long n, long top, const R& zero) {
  std::vector<R> total(top >= n ? top - n + 1 : 0, zero);
  if (total.empty()) return total;
  std::vector<R> cur(total.size(), zero);
  cur[0] = one_like(zero);
  total[0] = cur[0];
  for (long r = 1;; ++r) {
    std::vector<R> next(total.size(), zero);
    bool any = false;
    for (size_t d = 0; d < cur.size(); ++d) {
      if (cur[d].is_zero()) continue;
      long m = n + static_cast<long>(d);
      if (m == 0) continue;
      for (size_t j = 1; j <= theta.size(); ++j) {
        size_t t = d + j;
        if (t >= next.size()) break;
        if (theta[j - 1].is_zero()) continue;
        next[t] += Rational(sign * m) * (theta[j - 1] * cur[d]);
        any = true;
      }
    }
    if (!any) break;
    for (auto& c : next) c = Rational(1, r) * c;
    for (size_t d = 0; d < total.size(); ++d) total[d] += next[d];
    cur = std::move(next);
  }
  return total;
}

// Solves theta_1..theta_J in exp(sign * sum theta_j y^{j+1} d/dy) y = y + sum_j target[j-1] y^{j+1}.
template <class R>
std::vector<R> solve_exponent_coefficients(const std::vector<R>& target, int sign, const R& zero) {
  std::vector<R> theta;
  for (size_t j = 1; j <= target.size(); ++j) {
    std::vector<R> trial = theta;
    trial.push_back(zero);
    std::vector<R> e = exp_derivation_monomial(trial, sign, 1, static_cast<long>(j) + 1, zero);
    theta.push_back(Rational(sign) * (target[j - 1] - e[j]));
  }
  return theta;
}

struct DerivCoeffs {
  int k = 1;
  std::vector<Rational> a;  // a[0] = a_1
};

// The a_j with exp(-sum a_j x^{j+1} d/dx) x = ((1+x)^k - 1)/k through x^{J+1}.
DerivCoeffs solve_a_coeffs(int k, int depth);

// Element of C[x, x^-1][[z^{1/k}, z^{-1/k}]]: finitely many z-powers per
// x-degree, truncated above in x. Stored as a two-variable series over (x, z).
class XLaurent {
 public:
  XLaurent() : s_({"x", "z"}, {1, 1}) {}
  explicit XLaurent(int ram, Window xwin = Window::all())
      : s_({"x", "z"}, {1, ram}, {xwin, Window::all()}) {}
  explicit XLaurent(MultiSeries<Rational> s);

  void add_term(long xdeg, const Rational& zexp, const Rational& c) { s_.add_term({Rational(xdeg), zexp}, c); }
  // Coefficient of x^n as a series in z; throws outside the x-window.
  FracSeries<Rational> coefficient(long n) const;
  const Window& x_window() const { return s_.windows()[0]; }
  const MultiSeries<Rational>& series() const { return s_; }
  bool is_zero() const { return s_.is_zero(); }

  XLaurent operator+(const XLaurent& o) const { return XLaurent(s_ + o.s_); }
  XLaurent operator-(const XLaurent& o) const { return XLaurent(s_ - o.s_); }
  XLaurent operator*(const XLaurent& o) const { return XLaurent(s_ * o.s_); }
  friend XLaurent operator*(const Rational& c, const XLaurent& a) { return XLaurent(c * a.s_); }
  XLaurent times_z(const Rational& e, const Rational& c = Rational(1)) const {
    return XLaurent(s_.shifted({Rational(0), e}, c));
  }
  XLaurent d_dx() const { return XLaurent(s_.derivative(0)); }
  XLaurent d_dz() const { return XLaurent(s_.derivative(1)); }
  XLaurent pow(long n) const;
  XLaurent truncated(long xhi) const { return XLaurent(s_.restricted(0, Window::upto(Rational(xhi)))); }
  friend bool operator==(const XLaurent& a, const XLaurent& b) { return a.s_ == b.s_; }

 private:
  MultiSeries<Rational> s_;
};

// exp(-sum_{j>=1} alpha_j x^{j+1} d/dx) x^n through x-degree n + order.
// alpha[j-1] is alpha_j, a Laurent polynomial in z.
XLaurent exp_derivation_apply(const std::vector<FracSeries<Rational>>& alpha, long n, int order);

// f(x) = (z^{1/k}/k)((1+x)^k - 1), exact.
XLaurent f_series(int k, int order);
// (1 + k z^{-1/k} x)^{1/k} - 1 through x^order.
XLaurent f_inverse_series(int k, int order);
// outer(inner(x)); inner must have no terms of x-degree below 1.
XLaurent compose(const XLaurent& outer, const XLaurent& inner);

// Delta_k^x(z) x^n = (z((1 + z^{-1/k} x)^k - 1))^n through x^{n+order}.
XLaurent delta_k_x_apply(int k, long n, int order);
// Delta_k^x(z)^{-1} x^n = (z^{1/k}((1 + x/z)^{1/k} - 1))^n through x^{n+order}.
XLaurent delta_k_x_inverse_apply(int k, long n, int order);

// Residuals of the two first-order identities satisfied by Delta_k^x on x^n:
//   -D d/dx + (1/k) z^{1/k-1} d/dx D - d/dz D
//   -D^-1 d/dx + k z^{1-1/k} d/dx D^-1 - k z^{1-1/k} d/dz D^-1
XLaurent delta_x_derivative_residual(int k, long n, int order);
XLaurent delta_x_inverse_derivative_residual(int k, long n, int order);

// Theta_j evaluated at x = (1/k) z^{1/k-1} z0, as a series in (z, z0)
// through z0^order; j = 0 returns exp(Theta_0).
MultiSeries<Rational> theta_series(int k, int j, int order);
// Closed forms: -a_j (z+z0)^{-j/k}, and z^{1/k-1}(z+z0)^{1-1/k} for j = 0.
MultiSeries<Rational> theta_closed_form(int k, int j, int order);

}  // namespace permtwist
