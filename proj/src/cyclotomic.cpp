#include "permtwist/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace permtwist {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of p modulo a monic integer polynomial m.
void reduce_monic(Poly& p, const std::vector<long>& m) {
  const size_t d = m.size() - 1;
  trim(p);
  while (p.size() > d) {
    Rational lead = p.back();
    size_t shift = p.size() - 1 - d;
    for (size_t i = 0; i < d; ++i)
      if (m[i] != 0) p[shift + i] -= lead * Rational(m[i]);
    p.pop_back();
    trim(p);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Division with remainder over Q.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    Rational c = r.back() / lb;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d. Exact over Z.
  Poly p(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& pd = cyclotomic_polynomial(d);
    Poly b(pd.begin(), pd.end()), q, r;
    poly_divmod(p, b, q, r);
    p = q;
  }
  std::vector<long> out;
  for (auto& c : p) out.push_back(c.to_long());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

Cyclotomic::Cyclotomic(const Rational& r) {
  if (!r.is_zero()) c_.push_back(r);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  reduce();
}

void Cyclotomic::reduce() {
  reduce_monic(c_, cyclotomic_polynomial(order_));
  if (c_.size() <= 1) order_ = 1;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long j) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  long e = ((j % n) + n) % n;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = Rational(1);
  return Cyclotomic(n, std::move(c));
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic " + to_string() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

std::vector<Rational> Cyclotomic::raw_lift(int m) const {
  if (m % order_) throw std::invalid_argument("lift target must be a multiple of the order");
  if (m == order_) return c_;
  const int step = m / order_;
  std::vector<Rational> c(c_.empty() ? 0 : (c_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  reduce_monic(c, cyclotomic_polynomial(m));
  return c;
}

Cyclotomic Cyclotomic::lifted(int m) const { return Cyclotomic(m, raw_lift(m)); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim(c_);
    if (c_.size() <= 1) order_ = 1;
    return *this;
  }
  int m = std::lcm(order_, o.order_);
  std::vector<Rational> a = raw_lift(m), b = o.raw_lift(m);
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  order_ = m;
  c_ = std::move(a);
  reduce();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    order_ = 1;
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  int m = std::lcm(order_, o.order_);
  Poly p = poly_mul(raw_lift(m), o.raw_lift(m));
  order_ = m;
  c_ = std::move(p);
  reduce();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (order_ == 1) return Cyclotomic(c_[0].inverse());
  // Extended Euclid: find s with s * a = 1 mod Phi_N.
  const auto& phi = cyclotomic_polynomial(order_);
  Poly r0(phi.begin(), phi.end()), r1 = c_;
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Rational inv = r1[0].inverse();
  for (auto& c : s1) c *= inv;
  return Cyclotomic(order_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic out(1), b = *this;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1 || b.order_ == 1) return false;
  int m = std::lcm(a.order_, b.order_);
  return a.raw_lift(m) == b.raw_lift(m);
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  if (order_ == 1) return c_[0].to_string();
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].to_string() + ")";
    if (i > 0) out += "*z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace permtwist
