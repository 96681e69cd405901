#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permtwist/rational.hpp"

namespace permtwist {

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
// Computed once per N and cached.
const std::vector<long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as a polynomial in
// zeta reduced modulo Phi_N. Elements that happen to be rational are always
// stored at order 1, so mostly-rational computations stay cheap.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& r);  // NOLINT
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}  // NOLINT
  Cyclotomic(int n) : Cyclotomic(Rational(n)) {}   // NOLINT
  // Takes coefficients of 1, zeta, zeta^2, ... of any length and reduces.
  Cyclotomic(int order, std::vector<Rational> coeffs);

  // zeta_N^(j mod N).
  static Cyclotomic root_of_unity(int n, long j);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return order_ == 1; }
  Rational to_rational() const;  // throws if not rational

  // The same element computed at order m (m a multiple of order()), then
  // put back in canonical form.
  Cyclotomic lifted(int m) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  void reduce();
  std::vector<Rational> raw_lift(int m) const;

  int order_ = 1;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// Conversion used by generic code that is instantiated for both scalar types.
inline Cyclotomic to_cyclotomic(const Rational& r) { return Cyclotomic(r); }
inline const Cyclotomic& to_cyclotomic(const Cyclotomic& c) { return c; }

}  // namespace permtwist
