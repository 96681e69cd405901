#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permtwist/cyclotomic.hpp"
#include "permtwist/lincomb.hpp"
#include "permtwist/rational.hpp"

namespace permtwist {

// Reading a coefficient whose value is not guaranteed by the truncation.
struct WindowViolation : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Closed exponent interval on which coefficients are known. A missing bound
// means unbounded on that side; lo > hi means nothing is known.
struct Window {
  std::optional<Rational> lo, hi;

  static Window all() { return {}; }
  static Window upto(const Rational& h) { return {std::nullopt, h}; }
  static Window box(const Rational& l, const Rational& h) { return {l, h}; }

  bool contains(const Rational& e) const { return (!lo || *lo <= e) && (!hi || e <= *hi); }
  bool empty() const { return lo && hi && *lo > *hi; }
  bool exact() const { return !lo && !hi; }
  Window intersect(const Window& o) const;
  Window shifted(const Rational& d) const;
  std::string to_string() const;
  friend bool operator==(const Window&, const Window&) = default;
};

// Smallest and largest exponent present, if any.
struct Support {
  std::optional<Rational> min, max;
};

// Window of a product a*b that is guaranteed correct given the factor
// windows and supports; step is the exponent lattice spacing.
Window product_window(const Window& wa, const Support& sa, const Window& wb, const Support& sb,
                      const Rational& step);

// Series in one variable with exponents in (1/k)Z.
template <class S>
class FracSeries {
 public:
  FracSeries() = default;
  FracSeries(std::string var, int ram, Window w = Window::all()) : var_(std::move(var)), ram_(ram), win_(w) {}

  static FracSeries monomial(const std::string& var, int ram, const Rational& e, const S& c) {
    FracSeries s(var, ram);
    s.add_term(e, c);
    return s;
  }

  const std::string& variable() const { return var_; }
  int ramification() const { return ram_; }
  const Window& window() const { return win_; }
  const LinComb<Rational, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  void add_term(const Rational& e, const S& c) {
    check_lattice(e);
    if (win_.contains(e)) terms_.add(e, c);
  }

  S coefficient(const Rational& e) const {
    if (!win_.contains(e))
      throw WindowViolation("exponent " + e.to_string() + " outside window " + win_.to_string() + " of " + var_);
    return terms_.coeff(e);
  }
  S residue() const { return coefficient(Rational(-1)); }

  Support support() const {
    if (terms_.is_zero()) return {};
    return {terms_.begin()->first, std::prev(terms_.end())->first};
  }

  FracSeries restricted(const Window& w) const {
    FracSeries r(var_, ram_, win_.intersect(w));
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  FracSeries& operator+=(const FracSeries& o) {
    same_var(o);
    ram_ = static_cast<int>(lcm_long(ram_, o.ram_));
    win_ = win_.intersect(o.win_);
    LinComb<Rational, S> t;
    for (const auto& [e, c] : terms_) if (win_.contains(e)) t.add(e, c);
    for (const auto& [e, c] : o.terms_) if (win_.contains(e)) t.add(e, c);
    terms_ = std::move(t);
    return *this;
  }
  FracSeries& operator-=(const FracSeries& o) { return *this += -o; }
  FracSeries operator-() const {
    FracSeries r = *this;
    r.terms_ = -terms_;
    return r;
  }
  FracSeries& operator*=(const S& s) {
    terms_ *= s;
    return *this;
  }
  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(const S& s, FracSeries a) { return a *= s; }

  friend FracSeries operator*(const FracSeries& a, const FracSeries& b) {
    a.same_var(b);
    int ram = static_cast<int>(lcm_long(a.ram_, b.ram_));
    FracSeries r(a.var_, ram, product_window(a.win_, a.support(), b.win_, b.support(), Rational(1, ram)));
    if (r.win_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  // Multiply by c z^e.
  FracSeries shifted(const Rational& e, const S& c = S(1)) const {
    FracSeries r(var_, static_cast<int>(lcm_long(ram_, e.denominator().get_si())), win_.shifted(e));
    for (const auto& [x, v] : terms_) r.add_term(x + e, v * c);
    return r;
  }

  FracSeries derivative() const {
    FracSeries r(var_, ram_, win_.shifted(Rational(-1)));
    for (const auto& [e, c] : terms_) r.add_term(e - Rational(1), c * S(e));
    return r;
  }

  // z^{m/k} -> eta^{-jm} z^{m/k}, eta = exp(-2 pi i / k). Window unchanged.
  FracSeries<Cyclotomic> subst_root_of_unity(long j) const {
    FracSeries<Cyclotomic> r(var_, ram_, win_);
    for (const auto& [e, c] : terms_) {
      long m = (e * Rational(ram_)).to_long();
      r.add_term(e, Cyclotomic::root_of_unity(ram_, j * m) * to_cyclotomic(c));
    }
    return r;
  }

  // Known-equal test: the difference vanishes on the common window.
  friend bool operator==(const FracSeries& a, const FracSeries& b) { return (a - b).is_zero(); }

 private:
  void same_var(const FracSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("series in different variables: " + var_ + ", " + o.var_);
  }
  void check_lattice(const Rational& e) const {
    if (!(e * Rational(ram_)).is_integer())
      throw std::invalid_argument("exponent " + e.to_string() + " not in (1/" + std::to_string(ram_) + ")Z");
  }

  std::string var_ = "z";
  int ram_ = 1;
  Window win_;
  LinComb<Rational, S> terms_;
};

using Exponents = std::vector<Rational>;

// Sparse series in several variables. At most one variable may carry a
// truncation when series are multiplied; box-truncated series built for the
// delta identities are compared but never multiplied.
template <class S>
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(std::vector<std::string> vars, std::vector<int> ram)
      : vars_(std::move(vars)), ram_(std::move(ram)), win_(vars_.size()) {
    if (ram_.size() != vars_.size()) throw std::invalid_argument("ramification/variable count mismatch");
  }
  MultiSeries(std::vector<std::string> vars, std::vector<int> ram, std::vector<Window> win)
      : vars_(std::move(vars)), ram_(std::move(ram)), win_(std::move(win)) {
    if (ram_.size() != vars_.size() || win_.size() != vars_.size())
      throw std::invalid_argument("series shape mismatch");
  }

  // Same variables and ramification, exact, empty.
  MultiSeries zero_like() const { return MultiSeries(vars_, ram_); }
  MultiSeries constant_like(const S& c) const {
    MultiSeries r = zero_like();
    r.add_term(Exponents(vars_.size(), Rational(0)), c);
    return r;
  }

  size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& ramification() const { return ram_; }
  const std::vector<Window>& windows() const { return win_; }
  const LinComb<Exponents, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  size_t index_of(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw std::invalid_argument("no variable " + v);
    return static_cast<size_t>(it - vars_.begin());
  }

  bool in_window(const Exponents& e) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (!win_[i].contains(e[i])) return false;
    return true;
  }

  void add_term(const Exponents& e, const S& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i)
      if (!(e[i] * Rational(ram_[i])).is_integer())
        throw std::invalid_argument("exponent " + e[i].to_string() + " off lattice for " + vars_[i]);
    if (in_window(e)) terms_.add(e, c);
  }

  S coefficient(const Exponents& e) const {
    if (!in_window(e)) throw WindowViolation("exponent outside window");
    return terms_.coeff(e);
  }

  Support support(size_t i) const {
    Support s;
    for (const auto& [e, c] : terms_) {
      if (!s.min || e[i] < *s.min) s.min = e[i];
      if (!s.max || e[i] > *s.max) s.max = e[i];
    }
    return s;
  }

  std::optional<size_t> truncated_variable() const {
    std::optional<size_t> t;
    for (size_t i = 0; i < win_.size(); ++i)
      if (!win_[i].exact()) {
        if (t) throw std::domain_error("series truncated in more than one variable");
        t = i;
      }
    return t;
  }

  MultiSeries restricted(size_t i, const Window& w) const {
    MultiSeries r = *this;
    r.win_[i] = win_[i].intersect(w);
    r.terms_.clear();
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
  }

  MultiSeries& operator+=(const MultiSeries& o) {
    same_shape(o);
    for (size_t i = 0; i < ram_.size(); ++i) {
      ram_[i] = static_cast<int>(lcm_long(ram_[i], o.ram_[i]));
      win_[i] = win_[i].intersect(o.win_[i]);
    }
    LinComb<Exponents, S> t;
    for (const auto& [e, c] : terms_) if (in_window(e)) t.add(e, c);
    for (const auto& [e, c] : o.terms_) if (in_window(e)) t.add(e, c);
    terms_ = std::move(t);
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) { return *this += -o; }
  MultiSeries operator-() const {
    MultiSeries r = *this;
    r.terms_ = -terms_;
    return r;
  }
  MultiSeries& operator*=(const S& s) {
    terms_ *= s;
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const S& s, MultiSeries a) { return a *= s; }

  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.same_shape(b);
    std::optional<size_t> ta = a.truncated_variable(), tb = b.truncated_variable();
    if (ta && tb && *ta != *tb)
      throw std::domain_error("product of series truncated in different variables");
    std::vector<int> ram(a.ram_.size());
    for (size_t i = 0; i < ram.size(); ++i) ram[i] = static_cast<int>(lcm_long(a.ram_[i], b.ram_[i]));
    std::vector<Window> win(ram.size());
    std::optional<size_t> t = ta ? ta : tb;
    if (t)
      win[*t] = product_window(a.win_[*t], a.support(*t), b.win_[*t], b.support(*t), Rational(1, ram[*t]));
    MultiSeries r(a.vars_, ram, win);
    if (t && win[*t].empty()) return r;
    Exponents e(ram.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  // Multiply by c * prod v_i^{e_i}.
  MultiSeries shifted(const Exponents& d, const S& c = S(1)) const {
    MultiSeries r = *this;
    for (size_t i = 0; i < d.size(); ++i) {
      r.win_[i] = win_[i].shifted(d[i]);
      r.ram_[i] = static_cast<int>(lcm_long(ram_[i], d[i].denominator().get_si()));
    }
    r.terms_.clear();
    Exponents e(d.size());
    for (const auto& [x, v] : terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = x[i] + d[i];
      r.add_term(e, v * c);
    }
    return r;
  }

  MultiSeries derivative(size_t i) const {
    MultiSeries r = *this;
    r.win_[i] = win_[i].shifted(Rational(-1));
    r.terms_.clear();
    for (const auto& [x, v] : terms_) {
      Exponents e = x;
      e[i] -= Rational(1);
      r.add_term(e, v * S(x[i]));
    }
    return r;
  }

  MultiSeries pow_nonneg(long n) const {
    MultiSeries out = constant_like(S(1)), b = *this;
    while (n > 0) {
      if (n & 1) out = out * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return out;
  }

  // s^r for a series truncated above in variable t (or exact) whose lowest
  // t-slice is a single monomial c m; uses the J.C.P. Miller recurrence on
  // (1 + eps)^r. Needs c^r rational: r integer or c = 1.
  MultiSeries pow(const Rational& r, size_t t) const;

  // Collapse to a series in variable i only; all other exponents must be 0.
  FracSeries<S> to_frac(size_t i) const {
    FracSeries<S> f(vars_[i], ram_[i], win_[i]);
    for (const auto& [e, c] : terms_) {
      for (size_t j = 0; j < e.size(); ++j)
        if (j != i && !e[j].is_zero()) throw std::domain_error("series depends on " + vars_[j]);
      f.add_term(e[i], c);
    }
    return f;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return (a - b).is_zero(); }

 private:
  void same_shape(const MultiSeries& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("series over different variables");
  }

  std::vector<std::string> vars_;
  std::vector<int> ram_;
  std::vector<Window> win_;
  LinComb<Exponents, S> terms_;
};

template <class S>
MultiSeries<S> MultiSeries<S>::pow(const Rational& r, size_t t) const {
  if (terms_.is_zero()) throw std::domain_error("power of a zero series");
  for (size_t i = 0; i < win_.size(); ++i)
    if (i != t && !win_[i].exact()) throw std::domain_error("power needs truncation only in its own variable");
  if (win_[t].lo) throw std::domain_error("power needs a series bounded below");
  // Lowest t-slice.
  Rational b = support(t).min.value();
  std::vector<std::pair<Exponents, S>> lead;
  for (const auto& [e, c] : terms_)
    if (e[t] == b) lead.emplace_back(e, c);
  if (lead.size() != 1) throw std::domain_error("power needs a monomial leading slice");
  const Exponents& le = lead[0].first;
  const S& lc = lead[0].second;
  S lc_pow;
  if (r.is_integer()) {
    lc_pow = S(1);
    long n = r.to_long();
    S base = n < 0 ? S(1) / lc : lc;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) lc_pow *= base;
  } else if (lc == S(1)) {
    lc_pow = S(1);
  } else {
    throw std::domain_error("non-integral power of a non-unit leading coefficient");
  }
  // eps = s / (c m) - 1, graded by t-degree in steps of 1/ram_t.
  const Rational step(1, ram_[t]);
  MultiSeries eps = zero_like();
  Exponents neg(le.size());
  for (size_t i = 0; i < le.size(); ++i) neg[i] = -le[i];
  S inv_lc = S(1) / lc;
  for (const auto& [e, c] : terms_) {
    if (e[t] == b) continue;
    Exponents x(e.size());
    for (size_t i = 0; i < e.size(); ++i) x[i] = e[i] + neg[i];
    eps.terms_.add(x, c * inv_lc);
  }
  // eps slices e_n at t-degree n*step, n >= 1; known through degree hi - b.
  std::optional<long> nmax;
  if (win_[t].hi) nmax = ((*win_[t].hi - b) / step).floor().get_si();
  long top = nmax ? *nmax : 0;
  if (!nmax) {
    // exact series: the answer is finite only if eps vanishes
    if (!eps.is_zero() && !r.is_integer()) throw std::domain_error("infinite power of an exact series");
    if (!eps.is_zero() && r.sign() < 0) throw std::domain_error("infinite inverse of an exact series");
    if (!eps.is_zero()) return (r.is_zero() ? constant_like(S(1)) : pow_nonneg(r.to_long()));
  }
  std::vector<MultiSeries> e_slice(top + 1, zero_like()), b_slice(top + 1, zero_like());
  for (const auto& [e, c] : eps.terms_) {
    long n = (e[t] / step).to_long();
    if (n >= 1 && n <= top) {
      Exponents x = e;
      x[t] = Rational(0);
      e_slice[n].terms_.add(x, c);
    }
  }
  b_slice[0] = constant_like(S(1));
  for (long n = 1; n <= top; ++n) {
    MultiSeries acc = zero_like();
    for (long i = 1; i <= n; ++i) {
      if (e_slice[i].is_zero() || b_slice[n - i].is_zero()) continue;
      Rational w = (r + Rational(1)) * Rational(i) - Rational(n);
      if (w.is_zero()) continue;
      acc += S(w) * (e_slice[i] * b_slice[n - i]);
    }
    b_slice[n] = S(Rational(1, n)) * acc;
  }
  std::vector<Window> w(win_.size());
  Rational lead_t = b * r;
  if (nmax) w[t] = Window::upto(*win_[t].hi - b + lead_t);
  std::vector<int> ram = ram_;
  for (size_t i = 0; i < le.size(); ++i)
    ram[i] = static_cast<int>(lcm_long(ram[i], (le[i] * r).denominator().get_si()));
  MultiSeries out(vars_, ram, w);
  for (long n = 0; n <= top; ++n)
    for (const auto& [e, c] : b_slice[n].terms_) {
      Exponents x = e;
      for (size_t i = 0; i < x.size(); ++i) x[i] += le[i] * r;
      x[t] += step * Rational(n);
      out.add_term(x, c * lc_pow);
    }
  return out;
}

// (z + sign*z0)^r = sum_{m=0}^{order} C(r,m) sign^m z^{r-m} z0^m, expanded in
// nonnegative powers of the second variable. Window in z0 is (-inf, order].
MultiSeries<Rational> binomial_expand(const Rational& r, int sign, int order, const std::string& z = "z",
                                      const std::string& z0 = "z0");

// Sum over n in Z of tau^n (A + sigma B)^{n/s + shift} C^{-n/s - shift - 1},
// with (A + sigma B) expanded in nonnegative powers of B, restricted to the
// box where every variable's exponent lies in [-radius, radius]. Variables
// are (vars[0], vars[1], vars[2]); a, b, c index into them.
struct DeltaTerm {
  size_t a, b, c;
  int sigma = 1;
  Rational shift = Rational(0);
  int denom = 1;
  bool alternating = false;
};
MultiSeries<Rational> delta_box(const std::vector<std::string>& vars, int ram, const DeltaTerm& d,
                                const Rational& radius);

}  // namespace permtwist

namespace permtwist {

// Residuals (left minus right) of the formal delta-function identities used
// by the twisted Jacobi identity, over the variables (z0, z1, z2) and the box
// |exponent| <= radius in each variable. All vanish identically.

// z2^-1 ((z1-z0)/z2)^{-p/k} d((z1-z0)/z2) = z1^-1 ((z2+z0)/z1)^{p/k} d((z2+z0)/z1)
MultiSeries<Rational> delta_shift_residual(int k, int p, const Rational& radius);
// sum_p ((z1-z0)/z2)^{p/k} z2^-1 d((z1-z0)/z2) = z2^-1 d((z1-z0)^{1/k}/z2^{1/k})
MultiSeries<Rational> delta_branch_sum_residual(int k, const Rational& radius);
// z2^-1 d((z1-z0)^{1/k}/z2^{1/k}) = z1^-1 d((z2+z0)^{1/k}/z1^{1/k})
MultiSeries<Rational> delta_fractional_residual(int k, const Rational& radius);
// z0^-1 d((z1-z2)/z0) - z0^-1 d((z2-z1)/(-z0)) = z2^-1 d((z1-z0)/z2)
MultiSeries<Rational> delta_three_term_residual(const Rational& radius);
// (z1^{1/k} - x)^n at x = z1^{1/k} - (z1-z0)^{1/k}, minus (z1-z0)^{n/k};
// variables (z1, z0), truncated at z0-degree order.
MultiSeries<Rational> root_substitution_residual(int k, int n, int order);

}  // namespace permtwist
