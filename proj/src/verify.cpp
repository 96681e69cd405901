#include "permtwist/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "permtwist/delta.hpp"
#include "permtwist/derivation.hpp"
#include "permtwist/permutation.hpp"
#include "permtwist/series.hpp"
#include "permtwist/twist.hpp"

namespace permtwist {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  bool zero = true;
  long checked = 0;
  std::vector<std::string> samples;

  void add(bool z, const std::string& where = {}) {
    ++checked;
    if (z) return;
    zero = false;
    if (samples.size() < 5 && !where.empty()) samples.push_back(where);
  }
  void add(const CheckResult& r) {
    checked += r.checked;
    if (r.ok()) return;
    zero = false;
    for (const auto& s : r.samples)
      if (samples.size() < 5) samples.push_back(s);
  }
};

VerifyItem timed(std::string identity, std::string anchor, Params params, std::string window,
                 const std::function<void(Outcome&)>& body, bool expect_zero = true) {
  VerifyItem it;
  it.identity = std::move(identity);
  it.anchor = std::move(anchor);
  it.parameters = std::move(params);
  it.window = std::move(window);
  it.expect_zero = expect_zero;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  body(o);
  it.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  it.residual_zero = o.zero;
  it.checked = o.checked;
  it.samples = std::move(o.samples);
  return it;
}

int pick(int v, int fallback) { return v < 0 ? fallback : v; }

std::string str(long v) { return std::to_string(v); }

std::vector<RVec> basis_vectors(int lo, int hi) {
  std::vector<RVec> out;
  for (const auto& p : basis_upto(lo, hi)) out.emplace_back(p, Rational(1));
  return out;
}

std::string label(const RVec& u) {
  if (u == omega()) return "omega";
  if (u.size() == 1) return to_string(u.begin()->first);
  return "vector";
}

Permutation full_cycle(int k) {
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = (i + 1) % k + 1;
  return Permutation(std::move(img));
}

std::vector<VerifyItem> suite_coefficients(const VerifyParams& p) {
  const int depth = pick(p.depth, 4);
  return {timed("a_coefficients", "a_1 = (1-k)/2, a_2 = (k^2-1)/12", {{"k", str(p.k)}, {"depth", str(depth)}},
                "j=1..2", [&](Outcome& o) {
                  auto a = solve_a_coeffs(p.k, std::max(depth, 2)).a;
                  o.add(a[0] == Rational(1 - p.k, 2), "a_1");
                  o.add(a[1] == Rational(p.k * p.k - 1, 12), "a_2");
                })};
}

std::vector<VerifyItem> suite_theta(const VerifyParams& p) {
  const int order = pick(p.order, 6);
  std::vector<VerifyItem> out;
  for (int j = 0; j <= 4; ++j) {
    const std::string anchor = j == 0 ? "exp(Theta_0) = z^{1/k-1}(z+z0)^{1-1/k}" : "Theta_j = -a_j (z+z0)^{-j/k}";
    out.push_back(timed("theta_" + str(j), anchor, {{"k", str(p.k)}, {"j", str(j)}, {"order", str(order)}},
                        "z0^0..z0^" + str(order), [&](Outcome& o) {
                          o.add(theta_series(p.k, j, order) == theta_closed_form(p.k, j, order));
                        }));
  }
  return out;
}

std::vector<VerifyItem> suite_xidentities(const VerifyParams& p) {
  const int order = pick(p.order, 6);
  Params params{{"k", str(p.k)}, {"n", "-3..3"}, {"order", str(order)}};
  const std::string window = "x^n..x^{n+" + str(order) + "}";
  return {timed("delta_x_derivative", "D d/dx = (1/k) z^{1/k-1} d/dx D - d/dz D on x^n", params, window,
                [&](Outcome& o) {
                  for (long n = -3; n <= 3; ++n)
                    o.add(delta_x_derivative_residual(p.k, n, order).is_zero(), "n=" + str(n));
                }),
          timed("delta_x_inverse_derivative",
                "D^-1 d/dx = k z^{1-1/k} d/dx D^-1 - k z^{1-1/k} d/dz D^-1 on x^n", params, window,
                [&](Outcome& o) {
                  for (long n = -3; n <= 3; ++n)
                    o.add(delta_x_inverse_derivative_residual(p.k, n, order).is_zero(), "n=" + str(n));
                })};
}

std::vector<VerifyItem> suite_conjugation(const VerifyParams& p) {
  const int cap = pick(p.cap, 4), order = pick(p.order, 3), top = pick(p.depth, 3);
  std::vector<VerifyItem> out;
  for (const auto& u : basis_vectors(0, top))
    out.push_back(timed("delta_conjugation", "Delta(z) Y(u,z0) Delta(z)^-1 = Y(Delta(z+z0) u, (z+z0)^{1/k} - z^{1/k})",
                        {{"k", str(p.k)}, {"u", label(u)}, {"cap", str(cap)}, {"order", str(order)}},
                        "weight<=" + str(cap) + ", z0-order<=" + str(order), [&](Outcome& o) {
                          auto r = conjugation_residual(p.k, u, cap, order);
                          o.checked += r.coefficients_checked - 1;
                          o.add(r.is_zero());
                        }));
  return out;
}

std::vector<VerifyItem> suite_cor25(const VerifyParams& p) {
  const int cap = pick(p.cap, 4);
  Params params{{"k", str(p.k)}, {"cap", str(cap)}};
  const std::string window = "basis weight<=" + str(cap);
  return {timed("delta_derivative", "Delta L(-1) u = (1/k) z^{1/k-1} L(-1) Delta u + d/dz Delta u", params, window,
                [&](Outcome& o) {
                  for (const auto& u : basis_vectors(0, cap))
                    o.add(delta_derivative_residual(p.k, u).empty(), label(u));
                }),
          timed("delta_inverse_derivative",
                "Delta^-1 L(-1) u = k z^{1-1/k} L(-1) Delta^-1 u + k z^{1-1/k} d/dz Delta^-1 u", params, window,
                [&](Outcome& o) {
                  for (const auto& u : basis_vectors(0, cap))
                    o.add(delta_inverse_derivative_residual(p.k, u).empty(), label(u));
                })};
}

std::vector<VerifyItem> suite_twist_derivative(const VerifyParams& p) {
  const int cap = pick(p.cap, 3), radius = pick(p.order, 3), top = pick(p.depth, 3);
  return {timed("twisted_derivative", "Ybar(L(-1)u, z) = d/dz Ybar(u, z)",
                {{"k", str(p.k)}, {"u", "basis weight<=" + str(top)}, {"cap", str(cap)}, {"radius", str(radius)}},
                "|m|<=" + str(radius) + ", weight<=" + str(cap), [&](Outcome& o) {
                  for (const auto& u : basis_vectors(0, top)) o.add(check_derivative(p.k, u, Rational(radius), cap));
                })};
}

std::vector<VerifyItem> suite_twist_commutator(const VerifyParams& p) {
  const int cap = pick(p.cap, 3), radius = pick(p.order, 3), top = pick(p.depth, 2);
  std::vector<VerifyItem> out;
  const auto us = basis_vectors(0, top);
  for (const auto& u : us)
    for (const auto& v : us)
      out.push_back(timed("twisted_commutator",
                          "[u^i_m, v^j_n] = (1/k) eta^{(i-j)p} sum_l C(m,l) (u_l v)^j_{m+n-l}",
                          {{"k", str(p.k)}, {"u", label(u)}, {"v", label(v)}, {"slots", "all"}, {"cap", str(cap)},
                           {"radius", str(radius)}},
                          "|m|,|n|<=" + str(radius) + ", weight<=" + str(cap), [&](Outcome& o) {
                            for (int i = 1; i <= p.k; ++i)
                              for (int j = 1; j <= p.k; ++j)
                                o.add(check_twisted_commutator(p.k, u, i, v, j, Rational(radius), cap));
                          }));
  return out;
}

std::vector<VerifyItem> suite_twisted_jacobi(const VerifyParams& p) {
  const int cap = pick(p.cap, 4), radius = pick(p.order, 2);
  std::vector<VerifyItem> out;
  const RVec a = fock_state({1});
  for (const auto& [u, v] : {std::pair{a, a}, std::pair{omega(), a}})
    out.push_back(timed("twisted_jacobi", "twisted Jacobi identity, component form",
                        {{"k", str(p.k)}, {"u", label(u)}, {"v", label(v)}, {"slots", "all"}, {"cap", str(cap)},
                         {"radius", str(radius)}},
                        "|m|,|n|,|l|<=" + str(radius) + ", weight<=" + str(cap), [&](Outcome& o) {
                          for (int i = 1; i <= p.k; ++i)
                            for (int j = 1; j <= p.k; ++j)
                              o.add(check_twisted_jacobi(p.k, u, i, v, j, Rational(radius), cap));
                        }));
  return out;
}

std::vector<VerifyItem> suite_roundtrip(const VerifyParams& p) {
  const int cap = pick(p.cap, 3), radius = pick(p.order, 3);
  std::vector<VerifyItem> out;
  for (const auto& u : {vacuum(), fock_state({1}), omega()}) {
    Params params{{"k", str(p.k)}, {"u", label(u)}, {"cap", str(cap)}, {"radius", str(radius)}};
    const std::string window = "|m|<=" + str(radius) + ", weight<=" + str(cap);
    out.push_back(timed("u_of_t", "U(T(M)) = M", params, window,
                        [&](Outcome& o) { o.add(check_round_trip_ut(p.k, u, radius, cap)); }));
    out.push_back(timed("t_of_u", "T(U(M)) = M", params, window,
                        [&](Outcome& o) { o.add(check_round_trip_tu(p.k, u, Rational(radius), cap)); }));
  }
  return out;
}

std::vector<VerifyItem> suite_branch_negative(const VerifyParams& p) {
  const int cap = pick(p.cap, 3), radius = pick(p.order, 2);
  const RVec a = fock_state({1});
  const std::string window = "|m|,|n|<=" + str(radius) + ", weight<=" + str(cap);
  auto params = [&](const std::string& u, const std::string& v) {
    return Params{{"k", str(p.k)}, {"branch", "1"}, {"u", u}, {"v", v}, {"cap", str(cap)}, {"radius", str(radius)}};
  };
  return {timed("wrong_branch_commutator", "(z^k)^{1/k} = eta z breaks the commutator formula", params("1", "1"),
                window, [&](Outcome& o) { o.add(check_u_commutator(p.k, a, a, radius, cap, 1)); }, false),
          timed("wrong_branch_commutator", "(z^k)^{1/k} = eta z breaks the commutator formula",
                params("omega", "1"), window,
                [&](Outcome& o) { o.add(check_u_commutator(p.k, omega(), a, radius, cap, 1)); }, false),
          timed("wrong_branch_derivative", "(z^k)^{1/k} = eta z breaks the L(-1)-derivative property",
                params("1", "-"), window, [&](Outcome& o) { o.add(check_u_derivative(p.k, a, radius, cap, 1)); },
                false)};
}

std::vector<VerifyItem> suite_delta_calculus(const VerifyParams& p) {
  const int radius = pick(p.order, 4);
  const Rational r(radius);
  Params params{{"k", str(p.k)}, {"radius", str(radius)}};
  const std::string window = "exponents in [-" + str(radius) + "," + str(radius) + "]^3";
  std::vector<VerifyItem> out;
  out.push_back(timed("delta_shift", "z2^-1 ((z1-z0)/z2)^{-p/k} d((z1-z0)/z2) = z1^-1 ((z2+z0)/z1)^{p/k} d((z2+z0)/z1)",
                      params, window, [&](Outcome& o) {
                        for (int q = 0; q < p.k; ++q)
                          o.add(delta_shift_residual(p.k, q, r).is_zero(), "p=" + str(q));
                      }));
  out.push_back(timed("delta_branch_sum", "sum_p ((z1-z0)/z2)^{p/k} z2^-1 d((z1-z0)/z2) = z2^-1 d((z1-z0)^{1/k}/z2^{1/k})",
                      params, window,
                      [&](Outcome& o) { o.add(delta_branch_sum_residual(p.k, r).is_zero()); }));
  out.push_back(timed("delta_fractional", "z2^-1 d((z1-z0)^{1/k}/z2^{1/k}) = z1^-1 d((z2+z0)^{1/k}/z1^{1/k})", params,
                      window, [&](Outcome& o) { o.add(delta_fractional_residual(p.k, r).is_zero()); }));
  out.push_back(timed("delta_three_term", "z0^-1 d((z1-z2)/z0) - z0^-1 d((z2-z1)/(-z0)) = z2^-1 d((z1-z0)/z2)",
                      {{"radius", str(radius)}}, window,
                      [&](Outcome& o) { o.add(delta_three_term_residual(r).is_zero()); }));
  return out;
}

std::vector<VerifyItem> suite_spectrum(const VerifyParams& p) {
  const int cap = pick(p.cap, 6);
  const int terms = cap + 1;
  std::vector<VerifyItem> out;
  out.push_back(timed("lg0_spectrum", "L_g(0) = (1/k) L(0) + (k^2-1)c/(24k)",
                      {{"k", str(p.k)}, {"c", "1"}, {"cap", str(cap)}}, "weight<=" + str(cap),
                      [&](Outcome& o) { o.add(check_lg0(p.k, Rational(1), cap)); }));
  out.push_back(timed("twisted_character", "T(M)(n/k) = M(n), shifted by (k^2-1)c/(24k)",
                      {{"k", str(p.k)}, {"c", p.c.to_string()}, {"terms", str(terms)}}, str(terms) + " terms",
                      [&](Outcome& o) {
                        auto ch = twisted_character(full_cycle(p.k), p.c, terms);
                        const Rational shift = lg0_eigenvalue(p.k, 0, p.c);
                        o.add(static_cast<int>(ch.size()) == terms, "length");
                        for (size_t n = 0; n < ch.size(); ++n) {
                          o.add(ch[n].first == shift + Rational(static_cast<long>(n), p.k), "exponent " + str(n));
                          o.add(ch[n].second == Rational(partition_count(static_cast<int>(n))), "coeff " + str(n));
                        }
                      }));
  return out;
}

std::vector<VerifyItem> suite_assembly(const VerifyParams& p) {
  std::vector<VerifyItem> out;
  out.push_back(timed("decompose_reconstruct", "g = h g'_1 ... g'_p h^-1", {{"groups", "S_1..S_4"}}, "exhaustive",
                      [&](Outcome& o) {
                        for (int k = 1; k <= 4; ++k)
                          for (const auto& g : all_permutations(k))
                            o.add(decompose(g).reconstruct() == g, g.to_string());
                      }));
  out.push_back(timed("character_product", "character of (12)(3) = (k=2 twisted) x (untwisted)",
                      {{"g", "(1 2)(3)"}, {"c", p.c.to_string()}, {"terms", "8"}}, "8 terms", [&](Outcome& o) {
                        auto ch = twisted_character(Permutation::parse("(1 2)(3)"), p.c, 8);
                        auto a = twisted_character(Permutation::parse("(1 2)"), p.c, 40);
                        auto b = twisted_character(Permutation::parse("(1)"), p.c, 40);
                        std::map<Rational, Rational> conv;
                        for (const auto& [e1, c1] : a)
                          for (const auto& [e2, c2] : b) conv[e1 + e2] += c1 * c2;
                        o.add(ch.size() == 8, "length");
                        auto it = conv.begin();
                        for (const auto& [e, c] : ch) {
                          o.add(e == it->first && c == it->second, "exponent " + e.to_string());
                          ++it;
                        }
                      }));
  out.push_back(timed("assembled_monodromy", "Y_g(g v, z) = Y_g(v, z) under z^{1/L} -> eta_L^{-1} z^{1/L}",
                      {{"g", "S_3, (1 4)(2 3)"}, {"cap", "1"}}, "|m|<=1, grade<=1", [&](Outcome& o) {
                        const RVec a = fock_state({1});
                        const std::vector<TensorState> vs = {slot_state(3, a, 1), slot_state(3, a, 3),
                                                             tensor_product({a, a, vacuum()})};
                        for (const auto& g : all_permutations(3)) {
                          AssembledModule mod(g);
                          for (const auto& v : vs) o.add(check_twisted_monodromy(mod, v, Rational(1), Rational(1)));
                        }
                        AssembledModule mod4(Permutation::parse("(1 4)(2 3)"));
                        o.add(check_twisted_monodromy(mod4, tensor_product({a, vacuum(), a, vacuum()}), Rational(1),
                                                      Rational(1)));
                      }));
  return out;
}

using Runner = std::vector<VerifyItem> (*)(const VerifyParams&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"coefficients", suite_coefficients},
      {"theta", suite_theta},
      {"xidentities", suite_xidentities},
      {"conjugation", suite_conjugation},
      {"cor25", suite_cor25},
      {"twist-derivative", suite_twist_derivative},
      {"twist-commutator", suite_twist_commutator},
      {"twisted-jacobi", suite_twisted_jacobi},
      {"spectrum", suite_spectrum},
      {"roundtrip", suite_roundtrip},
      {"branch-negative", suite_branch_negative},
      {"assembly", suite_assembly},
      {"delta-calculus", suite_delta_calculus},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, r] : registry()) v.push_back(n);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<VerifyItem> run_suite(const std::string& name, const VerifyParams& p) {
  if (p.k < 1) throw std::invalid_argument("k must be positive");
  if (name == "all") {
    std::vector<VerifyItem> out;
    for (const auto& [n, r] : registry()) {
      auto items = r(p);
      out.insert(out.end(), items.begin(), items.end());
    }
    return out;
  }
  for (const auto& [n, r] : registry())
    if (n == name) return r(p);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace permtwist
