#include "permtwist/series.hpp"

namespace permtwist {

Window Window::intersect(const Window& o) const {
  Window r = *this;
  if (o.lo && (!r.lo || *o.lo > *r.lo)) r.lo = o.lo;
  if (o.hi && (!r.hi || *o.hi < *r.hi)) r.hi = o.hi;
  return r;
}

Window Window::shifted(const Rational& d) const {
  Window r = *this;
  if (r.lo) *r.lo += d;
  if (r.hi) *r.hi += d;
  return r;
}

std::string Window::to_string() const {
  return "[" + (lo ? lo->to_string() : std::string("-inf")) + ", " + (hi ? hi->to_string() : std::string("inf")) +
         "]";
}

namespace {

// Extended exponent: -inf, finite, +inf.
struct Ext {
  int inf = 0;  // -1, 0, +1
  Rational v;
};

// Lowest exponent at which s may be nonzero.
Ext lowest_possible(const Window& w, const Support& s, const Rational& step) {
  if (w.lo) return {-1, {}};
  std::optional<Rational> best = s.min;
  if (w.hi) {
    Rational h = *w.hi + step;
    if (!best || h < *best) best = h;
  }
  if (!best) return {+1, {}};
  return {0, *best};
}

Ext highest_possible(const Window& w, const Support& s, const Rational& step) {
  if (w.hi) return {+1, {}};
  std::optional<Rational> best = s.max;
  if (w.lo) {
    Rational l = *w.lo - step;
    if (!best || l > *best) best = l;
  }
  if (!best) return {-1, {}};
  return {0, *best};
}

}  // namespace

Window product_window(const Window& wa, const Support& sa, const Window& wb, const Support& sb,
                      const Rational& step) {
  Window r;
  bool nothing = false;
  auto upper = [&](const Window& w, const Window& ow, const Support& os) {
    if (!w.hi) return;
    Ext l = lowest_possible(ow, os, step);
    if (l.inf > 0) return;
    if (l.inf < 0) {
      nothing = true;
      return;
    }
    Rational h = *w.hi + l.v;
    if (!r.hi || h < *r.hi) r.hi = h;
  };
  auto lower = [&](const Window& w, const Window& ow, const Support& os) {
    if (!w.lo) return;
    Ext h = highest_possible(ow, os, step);
    if (h.inf < 0) return;
    if (h.inf > 0) {
      nothing = true;
      return;
    }
    Rational l = *w.lo + h.v;
    if (!r.lo || l > *r.lo) r.lo = l;
  };
  upper(wa, wb, sb);
  upper(wb, wa, sa);
  lower(wa, wb, sb);
  lower(wb, wa, sa);
  if (nothing) return Window::box(Rational(1), Rational(0));
  return r;
}

MultiSeries<Rational> binomial_expand(const Rational& r, int sign, int order, const std::string& z,
                                      const std::string& z0) {
  if (order < 0) throw std::invalid_argument("binomial_expand order must be nonnegative");
  int ram = static_cast<int>(r.denominator().get_si());
  MultiSeries<Rational> s({z, z0}, {ram, 1}, {Window::all(), Window::upto(Rational(order))});
  for (int m = 0; m <= order; ++m) {
    Rational c = binomial(r, m);
    if (sign < 0 && (m & 1)) c = -c;
    s.add_term({r - Rational(m), Rational(m)}, c);
  }
  return s;
}

MultiSeries<Rational> delta_box(const std::vector<std::string>& vars, int ram, const DeltaTerm& d,
                                const Rational& radius) {
  if (vars.size() != 3) throw std::invalid_argument("delta_box works on three variables");
  std::vector<int> rams(3, ram);
  std::vector<Window> box(3, Window::box(-radius, radius));
  MultiSeries<Rational> out(vars, rams, box);
  const Rational step(1, d.denom);
  // C exponent is -e-1 with e = n/s + shift; keep those inside the box.
  Rational e_lo = -radius - Rational(1), e_hi = radius - Rational(1);
  long n_lo = ((e_lo - d.shift) / step).ceil().get_si();
  long n_hi = ((e_hi - d.shift) / step).floor().get_si();
  long m_hi = radius.floor().get_si();
  for (long n = n_lo; n <= n_hi; ++n) {
    Rational e = step * Rational(n) + d.shift;
    Rational tau = (d.alternating && (n & 1)) ? Rational(-1) : Rational(1);
    for (long m = 0; m <= m_hi; ++m) {
      Exponents x(3);
      x[d.c] = -e - Rational(1);
      x[d.b] = Rational(m);
      x[d.a] = e - Rational(m);
      Rational c = tau * binomial(e, m);
      if (d.sigma < 0 && (m & 1)) c = -c;
      out.add_term(x, c);
    }
  }
  return out;
}

}  // namespace permtwist

namespace permtwist {

namespace {
const std::vector<std::string> kTri = {"z0", "z1", "z2"};
}

MultiSeries<Rational> delta_shift_residual(int k, int p, const Rational& radius) {
  Rational r(p, k);
  auto lhs = delta_box(kTri, k, {1, 0, 2, -1, -r, 1, false}, radius);
  auto rhs = delta_box(kTri, k, {2, 0, 1, +1, r, 1, false}, radius);
  return lhs - rhs;
}

MultiSeries<Rational> delta_branch_sum_residual(int k, const Rational& radius) {
  MultiSeries<Rational> lhs(kTri, {k, k, k}, std::vector<Window>(3, Window::box(-radius, radius)));
  for (int p = 0; p < k; ++p) lhs += delta_box(kTri, k, {1, 0, 2, -1, Rational(p, k), 1, false}, radius);
  auto rhs = delta_box(kTri, k, {1, 0, 2, -1, Rational(0), k, false}, radius);
  return lhs - rhs;
}

MultiSeries<Rational> delta_fractional_residual(int k, const Rational& radius) {
  auto lhs = delta_box(kTri, k, {1, 0, 2, -1, Rational(0), k, false}, radius);
  auto rhs = delta_box(kTri, k, {2, 0, 1, +1, Rational(0), k, false}, radius);
  return lhs - rhs;
}

MultiSeries<Rational> delta_three_term_residual(const Rational& radius) {
  auto a = delta_box(kTri, 1, {1, 2, 0, -1, Rational(0), 1, false}, radius);
  auto b = delta_box(kTri, 1, {2, 1, 0, -1, Rational(0), 1, true}, radius);
  auto c = delta_box(kTri, 1, {1, 0, 2, -1, Rational(0), 1, false}, radius);
  return a - b - c;
}

MultiSeries<Rational> root_substitution_residual(int k, int n, int order) {
  const Rational root(1, k);
  MultiSeries<Rational> x = binomial_expand(root, -1, order, "z1", "z0");
  x = -x;
  x.add_term({root, Rational(0)}, Rational(1));
  MultiSeries<Rational> lhs({"z1", "z0"}, {k, 1}, {Window::all(), Window::upto(Rational(order))});
  MultiSeries<Rational> xm = x.constant_like(Rational(1));
  for (int m = 0; m <= order; ++m) {
    Rational c = binomial(Rational(n), m);
    if (m & 1) c = -c;
    lhs += xm.shifted({Rational(n - m, k), Rational(0)}, c);
    xm = xm * x;
  }
  return lhs - binomial_expand(Rational(n, k), -1, order, "z1", "z0");
}

}  // namespace permtwist
