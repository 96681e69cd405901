#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "permtwist/cyclotomic.hpp"
#include "permtwist/delta.hpp"
#include "permtwist/fock.hpp"

namespace permtwist {

// eta = exp(-2 pi i / k).
Cyclotomic eta(int k);
Cyclotomic eta_pow(int k, long e);

// n/k + (k^2 - 1) c / (24 k)
Rational lg0_eigenvalue(int k, long n, const Rational& c);

// Coset index p in {0..k-1} with m in p/k + Z. Throws unless km is an integer.
int mode_coset(int k, const Rational& m);

// Pure tensors u_1 (x) ... (x) u_k of basis states, one partition per slot.
using TensorKey = std::vector<Partition>;
using TensorState = LinComb<TensorKey, Cyclotomic>;

TensorState tensor_vacuum(int k);
// Multilinear expansion of the slotwise vectors.
TensorState tensor_product(const std::vector<RVec>& slots);
// u in slot j (1-based), vacuum elsewhere.
TensorState slot_state(int k, const RVec& u, int j);
// Weight if every pure tensor has the same total weight; throws otherwise.
int tensor_weight(const TensorState& v);

// Operator-valued series sum_m a_m z^{-m-1} on the Fock space, m in (1/k)Z.
// A basis vector of Fock weight n sits at grade n/k. Modes are computed on
// demand per basis vector and cached.
class Field {
 public:
  Field(int k, int weight) : k_(k), weight_(weight) {}
  virtual ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int k() const { return k_; }
  // a_m raises the grade by weight - m - 1.
  int weight() const { return weight_; }

  const CVec& on_basis(const Rational& m, const Partition& w) const;
  CVec apply(const Rational& m, const CVec& w) const;

 protected:
  virtual CVec compute(const Rational& m, const Partition& w) const = 0;

 private:
  int k_;
  int weight_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Rational, Partition>, CVec> cache_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Y_g(1, z) = id.
FieldPtr identity_field(int k);
FieldPtr zero_field(int k, int weight);
// Y_g(u^j, z) for homogeneous u. Slot 1 is Ybar(u, z) = Y(Delta_k(z) u, z^{1/k});
// slot j is its image under z^{1/k} -> eta^{-(j-1)} z^{1/k}.
FieldPtr generator_field(int k, const RVec& u, int slot);
// a(z)_q b(z) for integer q, from the residue definition with the
// ((z1 - z0)/z)^{i/k} kernel applied to each sigma-eigencomponent of a.
// locality < 0 uses wt a + wt b.
FieldPtr product_field(FieldPtr a, FieldPtr b, long q, int locality = -1);
// Modes of a restricted to p/k + Z.
FieldPtr coset_field(FieldPtr a, int p);
// sum c_i a_i, all of one weight.
FieldPtr sum_field(int k, int weight, std::vector<std::pair<Cyclotomic, FieldPtr>> parts);

// Y_g(v, z): for each pure tensor, the iterated (-1)-product with slot k
// outermost and slot 1 innermost; vacuum slots are skipped.
FieldPtr tensor_field(int k, const TensorState& v);

// Y_U(u, z) = Y_g((Delta_k(z^k)^{-1} u)^1, z^k) with (z^k)^{1/k} = eta^branch z.
// Integer modes; grades are untwisted Fock weights.
FieldPtr u_functor_field(int k, const RVec& u, int branch = 0);
// T applied to a module given by a field factory: Ybar'(u, z) = Y'(Delta_k(z) u, z^{1/k}).
FieldPtr t_of_u_field(int k, const RVec& u);

// Matrices of a mode between pieces weight 0..weight_cap.
ModeMatrix<Cyclotomic> field_mode_matrix(const FieldPtr& f, const Rational& m, int weight_cap);
ModeMatrix<Cyclotomic> ybar_mode(int k, const RVec& u, const Rational& m, int weight_cap);
ModeMatrix<Cyclotomic> generator_slot_mode(int k, const RVec& u, int slot, const Rational& m, int weight_cap);
ModeMatrix<Cyclotomic> tensor_mode(int k, const TensorState& v, const Rational& m, int weight_cap);
ModeMatrix<Cyclotomic> u_functor_mode(int k, const RVec& u, long m, int weight_cap, int branch = 0);

// Outcome of a residual sweep: how many coefficients were compared and a
// short description of the first few nonzero ones.
struct CheckResult {
  long checked = 0;
  long nonzero = 0;
  std::vector<std::string> samples;
  bool ok() const { return nonzero == 0; }
  void record(const std::string& where, const CVec& residual) { record_zero(where, residual.is_zero()); }
  void record_zero(const std::string& where, bool zero);
  void merge(const CheckResult& o);
};

// Fractional modes m with |m| <= radius and km integral.
std::vector<Rational> mode_window(int k, const Rational& radius);

// (L(-1)u)^1_m + m u^1_{m-1}
CheckResult check_derivative(int k, const RVec& u, const Rational& radius, int weight_cap);
// [u^i_m, v^j_n] - (1/k) eta^{(i-j)p} sum_l C(m,l) (u_l v)^j_{m+n-l}, p the coset of m.
CheckResult check_twisted_commutator(int k, const RVec& u, int i, const RVec& v, int j,
                                     const Rational& radius, int weight_cap);
// Component form of the twisted Jacobi identity for u^i (projected to the
// coset of m) and v^j; l and n range over [-radius, radius].
CheckResult check_twisted_jacobi(int k, const RVec& u, int i, const RVec& v, int j,
                                 const Rational& radius, int weight_cap);
// Smallest N <= max_order with (z1-z2)^N [Y_g(u^i,z1), Y_g(v^j,z2)] = 0 on the
// window, or -1.
int locality_order(int k, const RVec& u, int i, const RVec& v, int j, int max_order,
                   const Rational& radius, int weight_cap);
// sum_j omega^j, mode 1, against lg0_eigenvalue on every basis vector.
CheckResult check_lg0(int k, const Rational& c, int weight_cap);
// Every mode maps grade n/k into grade n/k + wt - m - 1.
CheckResult check_grading(const FieldPtr& f, const Rational& radius, int weight_cap);
// (1/k) sum_s eta^{-ps} Y_g(u^{j+s}) has modes only in p/k + Z and agrees
// there with Y_g(u^j).
CheckResult check_eigen_support(int k, const RVec& u, int j, const Rational& radius, int weight_cap);
// U(T(M)) against vertex_mode and T(U(M)) against ybar_mode.
CheckResult check_round_trip_ut(int k, const RVec& u, long radius, int weight_cap);
CheckResult check_round_trip_tu(int k, const RVec& u, const Rational& radius, int weight_cap);
// Commutator formula for Y_U on the given branch.
CheckResult check_u_commutator(int k, const RVec& u, const RVec& v, long radius, int weight_cap, int branch);
// L(-1)-derivative property for Y_U on the given branch.
CheckResult check_u_derivative(int k, const RVec& u, long radius, int weight_cap, int branch);
// Associator for Y_U with exponent n, coefficients z0^a z2^b with |a|,|b| <= radius.
CheckResult check_u_associator(int k, const RVec& u, const RVec& v, const Partition& w, int n, long radius);
// Smallest n <= max_n for which the associator holds, or -1.
int associator_order(int k, const RVec& u, const RVec& v, const Partition& w, int max_n, long radius);
// w in M(n) -> eta^{jn} w conjugates u^1_m into eta^{-jk(m+1)} u^1_m.
CheckResult check_generator_symmetry(int k, const RVec& u, int j, const Rational& radius, int weight_cap);

}  // namespace permtwist
