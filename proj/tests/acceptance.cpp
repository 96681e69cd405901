// Acceptance runner: one PASS/FAIL line per criterion. Residuals are exact, so
// a criterion passes only if every item has the expected (zero or nonzero)
// residual and the whole criterion fits its runtime budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permtwist/verify.hpp"

using namespace permtwist;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds
  std::function<std::vector<VerifyItem>()> run;
};

VerifyParams with_k(int k) {
  VerifyParams p;
  p.k = k;
  return p;
}

std::vector<VerifyItem> over_k(const std::string& suite, std::vector<int> ks,
                               const std::function<void(VerifyParams&)>& tweak = {}) {
  std::vector<VerifyItem> out;
  for (int k : ks) {
    VerifyParams p = with_k(k);
    if (tweak) tweak(p);
    auto items = run_suite(suite, p);
    out.insert(out.end(), items.begin(), items.end());
  }
  return out;
}

std::vector<Criterion> criteria() {
  return {
      {1, "a_1, a_2 closed forms, k = 1..6", 1, [] { return over_k("coefficients", {1, 2, 3, 4, 5, 6}); }},
      {2, "Theta_j closed forms, j = 0..4, k = 2,3, z0-order 6", 10, [] { return over_k("theta", {2, 3}); }},
      {3, "x^n identities, n in [-3,3], k = 2,3, order 6", 10, [] { return over_k("xidentities", {2, 3}); }},
      {4, "conjugation by Delta_k, wt u <= 3, weight <= 4, z0-order 3, k = 2,3", 120,
       [] {
         return over_k("conjugation", {2, 3}, [](VerifyParams& p) {
           p.cap = 4;
           p.order = 3;
           p.depth = 3;
         });
       }},
      {5, "L(-1) and L(0) conjugation corollaries, weight <= 4, k = 2,3", 30,
       [] { return over_k("cor25", {2, 3}, [](VerifyParams& p) { p.cap = 4; }); }},
      {6, "twisted derivative and commutator, wt u,v <= 2, |m|,|n| <= 3, k = 2 and a k = 3 spot check", 120,
       [] {
         auto out = over_k("twist-derivative", {2}, [](VerifyParams& p) {
           p.depth = 2;
           p.order = 3;
         });
         auto c2 = over_k("twist-commutator", {2}, [](VerifyParams& p) {
           p.depth = 2;
           p.order = 3;
         });
         auto c3 = over_k("twist-commutator", {3}, [](VerifyParams& p) {
           p.depth = 1;
           p.order = 3;
         });
         out.insert(out.end(), c2.begin(), c2.end());
         out.insert(out.end(), c3.begin(), c3.end());
         return out;
       }},
      {7, "twisted Jacobi identity, (alpha, alpha) and (omega, alpha), k = 2, window 4", 120,
       [] { return over_k("twisted-jacobi", {2}); }},
      {8, "L_g(0) = n/2 + 1/16 on n <= 6 and the k = 2 character", 5,
       [] { return over_k("spectrum", {2}, [](VerifyParams& p) { p.cap = 6; }); }},
      {9, "U(T(M)) and T(U(M)) round trips, u in {1, alpha, omega}, k = 2, weight <= 3", 60,
       [] { return over_k("roundtrip", {2}, [](VerifyParams& p) { p.cap = 3; }); }},
      {10, "wrong branch (z^2)^{1/2} = eta z gives a nonzero commutator residual for u = v = alpha", 60,
       [] {
         auto all = over_k("branch-negative", {2});
         // Only the (alpha, alpha) commutator belongs to this criterion.
         std::vector<VerifyItem> out;
         for (const auto& it : all)
           if (it.identity == "wrong_branch_commutator" && it.parameters.size() > 3 && it.parameters[2].second == "1" &&
               it.parameters[3].second == "1")
             out.push_back(it);
         return out;
       }},
      {11, "decompose/reconstruct on S_3, S_4 and the (12)(3) character, 8 terms", 10,
       [] { return over_k("assembly", {2}); }},
      {12, "delta-function identities on exponent boxes of size 4, k = 2,3", 30,
       [] { return over_k("delta-calculus", {2, 3}, [](VerifyParams& p) { p.order = 4; }); }},
  };
}

std::string describe(const VerifyItem& it) {
  std::string s = it.identity + " [";
  for (size_t i = 0; i < it.parameters.size(); ++i)
    s += (i ? ", " : "") + it.parameters[i].first + "=" + it.parameters[i].second;
  s += "] residual " + std::string(it.residual_zero ? "zero" : "nonzero") + ", expected " +
       (it.expect_zero ? "zero" : "nonzero");
  if (!it.samples.empty()) s += " (first at " + it.samples.front() + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<VerifyItem> items;
    std::string error;
    try {
      items = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::vector<const VerifyItem*> bad;
    long checked = 0;
    for (const auto& it : items) {
      checked += it.checked;
      if (!it.passed()) bad.push_back(&it);
    }
    const bool in_time = secs < c.budget;
    const bool ok = error.empty() && !items.empty() && bad.empty() && in_time;
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %.2fs / %gs  %zu items, %ld checks  %s\n", c.id, ok ? "PASS" : "FAIL", secs,
                c.budget, items.size(), checked, c.title.c_str());
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (items.empty() && error.empty()) std::printf("    no items ran\n");
    if (!in_time) std::printf("    over the runtime budget\n");
    for (const auto* it : bad) std::printf("    %s\n", describe(*it).c_str());
  }
  return failures ? 1 : 0;
}
