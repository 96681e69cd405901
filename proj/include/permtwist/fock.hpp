#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permtwist/cyclotomic.hpp"
#include "permtwist/lincomb.hpp"
#include "permtwist/rational.hpp"

namespace permtwist {

// Weakly decreasing positive parts; (l1, ..., lr) is the state
// alpha(-l1) ... alpha(-lr) |0>.
using Partition = std::vector<int>;

int weight(const Partition& p);
std::string to_string(const Partition& p);
// Partitions of n, reverse-lexicographic: (n), (n-1,1), (n-2,2), ...
const std::vector<Partition>& partitions(int n);
long partition_count(int n);

template <class S>
using FockVec = LinComb<Partition, S>;

using RVec = FockVec<Rational>;
using CVec = FockVec<Cyclotomic>;

RVec vacuum();
// alpha(-n1) ... alpha(-nr)|0> for any order of the ni > 0.
RVec fock_state(std::vector<int> parts, const Rational& c = Rational(1));
// (1/2) alpha(-1)^2 |0>, the conformal vector for c = 1.
RVec omega();
CVec to_cyclotomic(const RVec& v);

// Weight if v is homogeneous and nonzero; throws otherwise.
int homogeneous_weight(const RVec& v);
template <class S>
bool is_homogeneous(const FockVec<S>& v) {
  if (v.is_zero()) return true;
  int w = weight(v.begin()->first);
  for (const auto& [p, c] : v) if (weight(p) != w) return false;
  return true;
}
template <class S>
FockVec<S> weight_component(const FockVec<S>& v, int n) {
  FockVec<S> out;
  for (const auto& [p, c] : v) if (weight(p) == n) out.add(p, c);
  return out;
}

// Basis-level actions, cached.
const RVec& alpha_on_basis(int n, const Partition& p);
const RVec& virasoro_on_basis(int n, const Partition& p);
// u_m v for basis states u and v (untwisted vertex operator).
const RVec& vertex_mode_on_basis(const Partition& u, long m, const Partition& v);

template <class S>
FockVec<S> apply_basis_op(const FockVec<S>& v, const std::function<const RVec&(const Partition&)>& op) {
  FockVec<S> out;
  for (const auto& [p, c] : v)
    for (const auto& [q, d] : op(p)) out.add(q, c * S(d));
  return out;
}

template <class S>
FockVec<S> heisenberg_mode(int n, const FockVec<S>& v) {
  return apply_basis_op<S>(v, [n](const Partition& p) -> const RVec& { return alpha_on_basis(n, p); });
}

template <class S>
FockVec<S> virasoro_mode(int n, const FockVec<S>& v) {
  return apply_basis_op<S>(v, [n](const Partition& p) -> const RVec& { return virasoro_on_basis(n, p); });
}

template <class S>
FockVec<S> vertex_mode(const FockVec<S>& u, long m, const FockVec<S>& v) {
  FockVec<S> out;
  for (const auto& [pu, cu] : u)
    for (const auto& [pv, cv] : v) {
      S c = cu * cv;
      for (const auto& [q, d] : vertex_mode_on_basis(pu, m, pv)) out.add(q, c * S(d));
    }
  return out;
}

// Exact matrix of a linear operator between truncated graded pieces, stored
// column by column in basis order.
template <class S>
struct ModeMatrix {
  Rational mode;
  int src_lo = 0, src_hi = 0;
  std::vector<std::pair<Partition, FockVec<S>>> columns;

  friend bool operator==(const ModeMatrix& a, const ModeMatrix& b) { return a.columns == b.columns; }
  bool is_zero() const {
    for (const auto& [p, v] : columns) if (!v.is_zero()) return false;
    return true;
  }
};

template <class S>
ModeMatrix<S> build_mode_matrix(const Rational& mode, int src_lo, int src_hi,
                                const std::function<FockVec<S>(const FockVec<S>&)>& op) {
  ModeMatrix<S> m{mode, src_lo, src_hi, {}};
  for (int n = src_lo; n <= src_hi; ++n)
    for (const auto& p : partitions(n)) m.columns.emplace_back(p, op(FockVec<S>(p, S(1))));
  return m;
}

// Every basis vector of weight lo..hi.
std::vector<Partition> basis_upto(int lo, int hi);

}  // namespace permtwist
