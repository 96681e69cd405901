#include "doctest.h"
#include "permtwist/twist.hpp"

using namespace permtwist;

namespace {

CVec cbasis(const Partition& p) { return CVec(p, Cyclotomic(1)); }

CVec scaled_alpha(int n, const Partition& w, const Cyclotomic& c) {
  CVec v = to_cyclotomic(heisenberg_mode(n, RVec(w, Rational(1))));
  v *= c;
  return v;
}

std::vector<RVec> basis_vectors(int lo, int hi) {
  std::vector<RVec> out;
  for (const auto& p : basis_upto(lo, hi)) out.emplace_back(p, Rational(1));
  return out;
}

}  // namespace

TEST_CASE("lg0 eigenvalues") {
  CHECK(lg0_eigenvalue(1, 5, Rational(1)) == Rational(5));
  CHECK(lg0_eigenvalue(2, 0, Rational(1)) == Rational(1, 16));
  CHECK(lg0_eigenvalue(3, 0, Rational(1)) == Rational(1, 9));
  CHECK(lg0_eigenvalue(2, 3, Rational(1)) == Rational(3, 2) + Rational(1, 16));
}

TEST_CASE("mode cosets and windows") {
  CHECK(mode_coset(2, Rational(1, 2)) == 1);
  CHECK(mode_coset(3, Rational(-1, 3)) == 2);
  CHECK(mode_coset(3, Rational(4)) == 0);
  CHECK_THROWS(mode_coset(2, Rational(1, 3)));
  CHECK(mode_window(2, Rational(1)).size() == 5);
  CHECK(mode_window(3, Rational(1)).front() == Rational(-1));
}

TEST_CASE("ybar on the vacuum is the identity at m = -1") {
  for (int k : {1, 2, 3})
    for (const auto& m : mode_window(k, Rational(2))) {
      auto mat = ybar_mode(k, vacuum(), m, 3);
      for (const auto& [p, v] : mat.columns) CHECK(v == (m == Rational(-1) ? cbasis(p) : CVec()));
    }
}

TEST_CASE("ybar of alpha(-1) matches the highest-weight formula") {
  // For a primary u of weight 1, Ybar(u, z) = k^{-1} z^{1/k-1} Y(u, z^{1/k}),
  // so u^1_m = (1/k) alpha(km).
  for (int k : {1, 2, 3})
    for (const auto& m : mode_window(k, Rational(3))) {
      long n = (Rational(k) * m).to_long();
      auto mat = ybar_mode(k, fock_state({1}), m, 4);
      for (const auto& [p, v] : mat.columns) CHECK(v == scaled_alpha(static_cast<int>(n), p, Cyclotomic(Rational(1, k))));
    }
}

TEST_CASE("slot modes") {
  // k = 2, slot 2: eta^{2(m+1)} = (-1)^{n} at m = n/2.
  for (const auto& m : mode_window(2, Rational(3))) {
    long n = (Rational(2) * m).to_long();
    auto mat = generator_slot_mode(2, fock_state({1}), 2, m, 3);
    Cyclotomic sign = (n % 2 == 0) ? Cyclotomic(1) : Cyclotomic(-1);
    for (const auto& [p, v] : mat.columns)
      CHECK(v == scaled_alpha(static_cast<int>(n), p, sign * Cyclotomic(Rational(1, 2))));
  }
  // Slot k+1 would be slot 1 again: k successive substitutions give back ybar.
  for (int k : {2, 3}) {
    for (const auto& m : mode_window(k, Rational(2))) {
      Cyclotomic total(1);
      for (int s = 0; s < k; ++s) total *= eta_pow(k, (Rational(k) * (m + Rational(1))).to_long());
      CHECK(total == Cyclotomic(1));
      for (int s = 1; s <= k; ++s)
        for (const auto& [p, v] : generator_slot_mode(k, vacuum(), s, m, 2).columns)
          CHECK(v == (m == Rational(-1) ? cbasis(p) : CVec()));
    }
  }
}

TEST_CASE("omega modes at k = 2") {
  // Delta_2(z) omega = (1/4) z^{-1} omega + (1/32) z^{-2} 1, so omega^1_1 = (1/4) L(0) + 1/32.
  FieldPtr f = generator_field(2, omega(), 1);
  for (const auto& w : basis_upto(0, 5)) {
    CVec expect = cbasis(w);
    expect *= Cyclotomic(Rational(weight(w), 4) + Rational(1, 32));
    CHECK(f->on_basis(Rational(1), w) == expect);
  }
  // Sum over both slots: L_g(0) = (1/2) L(0) + 1/16.
  CHECK(check_lg0(2, Rational(1), 6).ok());
  CHECK(check_lg0(3, Rational(1), 4).ok());
  CHECK(check_lg0(4, Rational(1), 3).ok());
}

TEST_CASE("products with the vacuum field") {
  for (int k : {2, 3}) {
    FieldPtr id = identity_field(k);
    for (const auto& u : basis_vectors(1, 2)) {
      FieldPtr a = generator_field(k, u, 1);
      FieldPtr left = product_field(id, a, -1);
      FieldPtr right = product_field(a, id, -1);
      for (const auto& m : mode_window(k, Rational(2)))
        for (const auto& w : basis_upto(0, 3)) {
          CHECK(left->on_basis(m, w) == a->on_basis(m, w));
          CHECK(right->on_basis(m, w) == a->on_basis(m, w));
        }
    }
  }
}

TEST_CASE("same-slot products reproduce the untwisted products") {
  // Y_g(u^1)_q Y_g(v^1) = Y_g((u_q v)^1).
  for (int k : {2, 3})
    for (const auto& u : basis_vectors(1, 2))
      for (const auto& v : basis_vectors(1, 2))
        for (long q = -2; q <= 2; ++q) {
          FieldPtr prod = product_field(generator_field(k, u, 1), generator_field(k, v, 1), q);
          FieldPtr direct = generator_field(k, vertex_mode(u, q, v), 1);
          for (const auto& m : mode_window(k, Rational(3, 2)))
            for (const auto& w : basis_upto(0, 2)) CHECK(prod->on_basis(m, w) == direct->on_basis(m, w));
        }
}

TEST_CASE("products across slots") {
  const int k = 2;
  for (const auto& u : basis_vectors(1, 2))
    for (const auto& v : basis_vectors(1, 2)) {
      FieldPtr a = generator_field(k, u, 2), b = generator_field(k, v, 1);
      // Nonnegative products of different slots vanish.
      for (long q = 0; q <= 2; ++q) {
        FieldPtr prod = product_field(a, b, q);
        for (const auto& m : mode_window(k, Rational(1)))
          for (const auto& w : basis_upto(0, 2)) CHECK(prod->on_basis(m, w).is_zero());
      }
      // u^2_{-2} v^1 = (L(-1) u)^2_{-1} v^1.
      FieldPtr lhs = product_field(a, b, -2);
      FieldPtr rhs = product_field(generator_field(k, virasoro_mode(-1, u), 2), b, -1);
      for (const auto& m : mode_window(k, Rational(1)))
        for (const auto& w : basis_upto(0, 2)) CHECK(lhs->on_basis(m, w) == rhs->on_basis(m, w));
    }
}

TEST_CASE("the product does not depend on the locality order used") {
  const int k = 2;
  FieldPtr a = generator_field(k, fock_state({1}), 2), b = generator_field(k, omega(), 1);
  FieldPtr p2 = product_field(a, b, -1, 3), p5 = product_field(a, b, -1, 5);
  for (const auto& m : mode_window(k, Rational(2)))
    for (const auto& w : basis_upto(0, 3)) CHECK(p2->on_basis(m, w) == p5->on_basis(m, w));
}

TEST_CASE("tensor modes") {
  for (int k : {2, 3}) {
    for (const auto& m : mode_window(k, Rational(1)))
      for (const auto& [p, v] : tensor_mode(k, tensor_vacuum(k), m, 2).columns)
        CHECK(v == (m == Rational(-1) ? cbasis(p) : CVec()));
    RVec u = omega();
    for (int s = 1; s <= k; ++s)
      for (const auto& m : mode_window(k, Rational(1)))
        CHECK(tensor_mode(k, slot_state(k, u, s), m, 2) == generator_slot_mode(k, u, s, m, 2));
  }
  // omega-bar through the tensor assembly.
  TensorState wbar = slot_state(2, omega(), 1) + slot_state(2, omega(), 2);
  FieldPtr f = tensor_field(2, wbar);
  for (const auto& w : basis_upto(0, 5)) {
    CVec e = cbasis(w);
    e *= Cyclotomic(lg0_eigenvalue(2, weight(w), Rational(1)));
    CHECK(f->on_basis(Rational(1), w) == e);
  }
  CHECK(tensor_weight(tensor_product({fock_state({1}), fock_state({2})})) == 3);
  CHECK_THROWS(tensor_weight(tensor_product({fock_state({1}) + vacuum(), vacuum()})));
}

TEST_CASE("two-slot tensor fields obey the grading axiom") {
  const int k = 2;
  FieldPtr f = tensor_field(k, tensor_product({fock_state({1}), fock_state({1})}));
  CHECK(f->weight() == 2);
  CHECK(check_grading(f, Rational(2), 3).ok());
  FieldPtr g = tensor_field(3, tensor_product({fock_state({1}), vacuum(), fock_state({1})}));
  CHECK(check_grading(g, Rational(1), 2).ok());
}

TEST_CASE("L(-1) derivative for ybar") {
  for (const auto& u : basis_vectors(0, 3)) CHECK(check_derivative(2, u, Rational(3), 3).ok());
  CHECK(check_derivative(3, omega(), Rational(2), 3).ok());
}

TEST_CASE("twisted commutator formula") {
  const RVec a = fock_state({1});
  CHECK(check_twisted_commutator(2, vacuum(), 1, vacuum(), 1, Rational(2), 2).ok());
  // Direct oracle: [u^1_m, u^1_n] = (1/4) [alpha(2m), alpha(2n)] = (m/2) delta_{m+n,0}.
  FieldPtr f = generator_field(2, a, 1);
  for (const auto& m : mode_window(2, Rational(2)))
    for (const auto& n : mode_window(2, Rational(2)))
      for (const auto& w : basis_upto(0, 3)) {
        CVec c = f->apply(m, f->on_basis(n, w)) - f->apply(n, f->on_basis(m, w));
        CVec e;
        if (m + n == Rational(0)) e.add(w, Cyclotomic(m / Rational(2)));
        CHECK(c == e);
      }
  for (int i : {1, 2})
    for (int j : {1, 2}) {
      CHECK(check_twisted_commutator(2, a, i, a, j, Rational(2), 3).ok());
      CHECK(check_twisted_commutator(2, omega(), i, a, j, Rational(2), 3).ok());
    }
  CHECK(check_twisted_commutator(3, omega(), 1, a, 3, Rational(1), 2).ok());
}

TEST_CASE("twisted Jacobi identity") {
  const RVec a = fock_state({1});
  CHECK(check_twisted_jacobi(2, vacuum(), 1, vacuum(), 1, Rational(1), 2).ok());
  CHECK(check_twisted_jacobi(2, a, 1, a, 1, Rational(1), 2).ok());
  CHECK(check_twisted_jacobi(2, a, 2, a, 1, Rational(1), 2).ok());
  CHECK(check_twisted_jacobi(2, omega(), 1, a, 2, Rational(1), 2).ok());
  CHECK(check_twisted_jacobi(3, a, 1, a, 2, Rational(1), 2).ok());
  CHECK(check_twisted_jacobi(3, a, 3, a, 1, Rational(2, 3), 2).ok());
}

TEST_CASE("locality order") {
  const RVec a = fock_state({1});
  int n = locality_order(2, a, 1, a, 1, 4, Rational(2), 3);
  CHECK(n == 2);
  CHECK(locality_order(2, a, 1, a, 2, 4, Rational(2), 3) == 2);
  int m = locality_order(2, omega(), 1, a, 2, 6, Rational(2), 3);
  CHECK(m >= 0);
  CHECK(m <= 6);
}

TEST_CASE("eigencomponents are supported on their cosets") {
  for (int k : {2, 3}) {
    CHECK(check_eigen_support(k, fock_state({1}), 1, Rational(2), 2).ok());
    CHECK(check_eigen_support(k, omega(), 2, Rational(1), 2).ok());
  }
}

TEST_CASE("U and T are mutually inverse") {
  for (const auto& u : {vacuum(), fock_state({1}), omega()}) {
    CHECK(check_round_trip_ut(2, u, 3, 3).ok());
    CHECK(check_round_trip_tu(2, u, Rational(3, 2), 3).ok());
  }
  CHECK(check_round_trip_ut(3, fock_state({2, 1}), 2, 2).ok());
  for (long m = -2; m <= 2; ++m) {
    auto mat = u_functor_mode(2, omega(), m, 3);
    for (const auto& [p, v] : mat.columns)
      CHECK(v == to_cyclotomic(virasoro_mode(static_cast<int>(m - 1), RVec(p, Rational(1)))));
  }
  for (const auto& [p, v] : u_functor_mode(2, vacuum(), -1, 3).columns) CHECK(v == cbasis(p));
}

TEST_CASE("Y_U commutator and associator") {
  const RVec a = fock_state({1});
  CHECK(check_u_commutator(2, a, a, 2, 3, 0).ok());
  CHECK(check_u_commutator(2, omega(), a, 2, 3, 0).ok());
  for (const auto& u : basis_vectors(1, 2))
    for (const auto& v : basis_vectors(1, 2))
      for (const auto& w : basis_upto(0, 2)) {
        int n = associator_order(2, u, v, w, 6, 3);
        CHECK(n >= 0);
        CHECK(n <= weight(w) + homogeneous_weight(u));
      }
}

TEST_CASE("wrong branch for Y_U") {
  const RVec a = fock_state({1});
  // Y_U on branch j is Y(u, eta^j z); the alpha-alpha commutator only sees
  // l = 1, where eta^{-2j} = 1 at k = 2, so it still closes.
  CHECK(check_u_commutator(2, a, a, 2, 3, 1).ok());
  CHECK_FALSE(check_u_commutator(2, omega(), a, 2, 3, 1).ok());
  CHECK_FALSE(check_u_derivative(2, a, 2, 3, 1).ok());
  CHECK(check_u_derivative(2, a, 2, 3, 0).ok());
  CHECK_FALSE(check_u_commutator(3, a, a, 2, 3, 1).ok());
}

TEST_CASE("substitution symmetry of the generators") {
  for (int k : {2, 3})
    for (int j = 1; j < k; ++j) {
      CHECK(check_generator_symmetry(k, fock_state({1}), j, Rational(2), 3).ok());
      CHECK(check_generator_symmetry(k, omega(), j, Rational(1), 3).ok());
    }
}
