#pragma once

#include <map>
#include <vector>

#include "permtwist/fock.hpp"
#include "permtwist/series.hpp"

namespace permtwist {

// Series in z^{1/k} with Fock-vector coefficients: exponent -> vector.
template <class S>
using ZVec = std::map<Rational, FockVec<S>>;

template <class S>
void zvec_add(ZVec<S>& acc, const Rational& e, const FockVec<S>& v, const S& c = S(1)) {
  if (v.is_zero() || c.is_zero()) return;
  auto& slot = acc[e];
  slot.axpy(c, v);
  if (slot.is_zero()) acc.erase(e);
}

template <class S>
void zvec_add(ZVec<S>& acc, const ZVec<S>& o, const S& c = S(1)) {
  for (const auto& [e, v] : o) zvec_add(acc, e, v, c);
}

struct DeltaTermVec {
  int i;
  Rational exponent;
  RVec vec;
};

// Delta_k(z) u, or its inverse, as a finite list of (i, exponent, vector).
struct DeltaExpansion {
  int k = 1;
  int weight = 0;
  bool inverse = false;
  std::vector<DeltaTermVec> terms;

  ZVec<Rational> as_series() const;
};

// Degree-s pieces of exp(sign * sum_j a_j L(j)) u for homogeneous u; piece s
// has weight wt(u) - s. Index s = 0..wt(u).
std::vector<RVec> exp_virasoro_pieces(int k, const RVec& u, int sign);

// Delta_k(z) u = exp(sum a_j z^{-j/k} L(j)) k^{-L(0)} z^{(1/k-1) L(0)} u.
// Term i has weight p - i and exponent (1/k - 1) p - i/k. depth < 0 keeps
// all terms, otherwise terms with i > depth are dropped.
DeltaExpansion delta_apply(int k, const RVec& u, int depth = -1);
// Delta_k(z)^{-1} u = z^{-(1/k-1) L(0)} k^{L(0)} exp(-sum a_j z^{-j/k} L(j)) u.
// Term s has weight p - s and exponent p - p/k - s.
DeltaExpansion delta_inverse_apply(int k, const RVec& u, int depth = -1);

// Apply Delta or its inverse termwise to a z-series of (possibly
// inhomogeneous) vectors.
ZVec<Rational> delta_apply_series(int k, const ZVec<Rational>& s, bool inverse);

// Delta L(-1) u - (1/k) z^{1/k-1} L(-1) Delta u - d/dz Delta u.
ZVec<Rational> delta_derivative_residual(int k, const RVec& u);
// Delta^-1 L(-1) u - k z^{1-1/k} L(-1) Delta^-1 u - k z^{1-1/k} d/dz Delta^-1 u.
ZVec<Rational> delta_inverse_derivative_residual(int k, const RVec& u);

// Delta_k(z) Y(u, z0) Delta_k(z)^{-1} w - Y(Delta_k(z+z0) u, (z+z0)^{1/k} - z^{1/k}) w
// for every basis w of weight <= weight_cap, coefficient of z0^t for
// t in [-(wt u + wt w), z0_order]. Keys of the result: (w, t), nonzero only.
struct ConjugationResidual {
  std::map<std::pair<Partition, long>, ZVec<Rational>> nonzero;
  long coefficients_checked = 0;
  bool is_zero() const { return nonzero.empty(); }
};
ConjugationResidual conjugation_residual(int k, const RVec& u, int weight_cap, int z0_order);

}  // namespace permtwist
