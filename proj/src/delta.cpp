#include "permtwist/delta.hpp"

#include <mutex>
#include <stdexcept>

#include "permtwist/derivation.hpp"

namespace permtwist {

namespace {

const std::vector<Rational>& a_coeffs(int k, int depth) {
  static std::mutex mu;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[k];
  if (static_cast<int>(v.size()) < depth) v = solve_a_coeffs(k, std::max(depth, 8)).a;
  return v;
}

}  // namespace

std::vector<RVec> exp_virasoro_pieces(int k, const RVec& u, int sign) {
  const int p = homogeneous_weight(u);
  std::vector<RVec> pieces(p + 1);
  pieces[0] = u;
  if (p == 0) return pieces;
  const auto& a = a_coeffs(k, p);
  RVec cur = u;
  for (int r = 1; r <= p && !cur.is_zero(); ++r) {
    RVec next;
    for (int j = 1; j <= p; ++j)
      if (!a[j - 1].is_zero()) next.axpy(a[j - 1], virasoro_mode(j, cur));
    next *= Rational(sign, r);
    for (const auto& [q, c] : next) pieces[p - weight(q)].add(q, c);
    cur = std::move(next);
  }
  return pieces;
}

ZVec<Rational> DeltaExpansion::as_series() const {
  ZVec<Rational> s;
  for (const auto& t : terms) zvec_add(s, t.exponent, t.vec);
  return s;
}

DeltaExpansion delta_apply(int k, const RVec& u, int depth) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  DeltaExpansion d{k, 0, false, {}};
  if (u.is_zero()) return d;
  const int p = homogeneous_weight(u);
  d.weight = p;
  auto pieces = exp_virasoro_pieces(k, u, +1);
  const Rational scale = pow(Rational(k), -p);
  const Rational lead = (Rational(1, k) - Rational(1)) * Rational(p);
  for (int i = 0; i <= p; ++i) {
    if (depth >= 0 && i > depth) break;
    if (pieces[i].is_zero()) continue;
    d.terms.push_back({i, lead - Rational(i, k), scale * pieces[i]});
  }
  return d;
}

DeltaExpansion delta_inverse_apply(int k, const RVec& u, int depth) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  DeltaExpansion d{k, 0, true, {}};
  if (u.is_zero()) return d;
  const int p = homogeneous_weight(u);
  d.weight = p;
  auto pieces = exp_virasoro_pieces(k, u, -1);
  const Rational lead = Rational(p) - Rational(p, k);
  for (int s = 0; s <= p; ++s) {
    if (depth >= 0 && s > depth) break;
    if (pieces[s].is_zero()) continue;
    d.terms.push_back({s, lead - Rational(s), pow(Rational(k), p - s) * pieces[s]});
  }
  return d;
}

ZVec<Rational> delta_apply_series(int k, const ZVec<Rational>& s, bool inverse) {
  ZVec<Rational> out;
  for (const auto& [e, v] : s) {
    std::map<int, RVec> by_weight;
    for (const auto& [p, c] : v) by_weight[weight(p)].add(p, c);
    for (const auto& [w, comp] : by_weight) {
      DeltaExpansion d = inverse ? delta_inverse_apply(k, comp) : delta_apply(k, comp);
      for (const auto& t : d.terms) zvec_add(out, e + t.exponent, t.vec);
    }
  }
  return out;
}

namespace {

ZVec<Rational> d_dz(const ZVec<Rational>& s) {
  ZVec<Rational> out;
  for (const auto& [e, v] : s) zvec_add(out, e - Rational(1), v, e);
  return out;
}

ZVec<Rational> l_minus_one(const ZVec<Rational>& s) {
  ZVec<Rational> out;
  for (const auto& [e, v] : s) zvec_add(out, e, virasoro_mode(-1, v));
  return out;
}

ZVec<Rational> times_z(const ZVec<Rational>& s, const Rational& shift, const Rational& c) {
  ZVec<Rational> out;
  for (const auto& [e, v] : s) zvec_add(out, e + shift, v, c);
  return out;
}

}  // namespace

ZVec<Rational> delta_derivative_residual(int k, const RVec& u) {
  ZVec<Rational> du = delta_apply(k, u).as_series();
  ZVec<Rational> r = delta_apply(k, virasoro_mode(-1, u)).as_series();
  zvec_add(r, times_z(l_minus_one(du), Rational(1, k) - Rational(1), Rational(-1, k)));
  zvec_add(r, d_dz(du), Rational(-1));
  return r;
}

ZVec<Rational> delta_inverse_derivative_residual(int k, const RVec& u) {
  ZVec<Rational> du = delta_inverse_apply(k, u).as_series();
  const Rational shift = Rational(1) - Rational(1, k);
  ZVec<Rational> r = delta_inverse_apply(k, virasoro_mode(-1, u)).as_series();
  zvec_add(r, times_z(l_minus_one(du), shift, Rational(-k)));
  zvec_add(r, times_z(d_dz(du), shift, Rational(-k)));
  return r;
}

ConjugationResidual conjugation_residual(int k, const RVec& u, int weight_cap, int z0_order) {
  ConjugationResidual res;
  if (u.is_zero()) return res;
  const int p = homogeneous_weight(u);
  const DeltaExpansion du = delta_apply(k, u);
  const Rational root(1, k);
  // Powers of X = (z+z0)^{1/k} - z^{1/k}, cached by exponent.
  const int H = z0_order + p + weight_cap + 1;
  MultiSeries<Rational> X = binomial_expand(root, +1, H);
  X.add_term({root, Rational(0)}, Rational(-1));
  std::map<long, MultiSeries<Rational>> xpow;
  auto power = [&](long N) -> const MultiSeries<Rational>& {
    auto it = xpow.find(N);
    if (it == xpow.end()) it = xpow.emplace(N, X.pow(Rational(N), 1)).first;
    return it->second;
  };
  std::vector<MultiSeries<Rational>> zshift;
  for (const auto& t : du.terms) zshift.push_back(binomial_expand(t.exponent, +1, H));

  for (const auto& pw : basis_upto(0, weight_cap)) {
    const RVec w(pw, Rational(1));
    const int q = weight(pw);
    const long tlo = -(p + q);
    // Left side: Delta(z) u_{-t-1} Delta(z)^{-1} w.
    const ZVec<Rational> winv = delta_inverse_apply(k, w).as_series();
    std::map<long, ZVec<Rational>> side;
    for (long t = tlo; t <= z0_order; ++t) {
      ZVec<Rational> mid;
      for (const auto& [e, v] : winv) zvec_add(mid, e, vertex_mode(u, -t - 1, v));
      side[t] = delta_apply_series(k, mid, false);
    }
    // Right side: sum_i sum_n u(i)_n w [z0^t] (z+z0)^{e_i} X^{-n-1}.
    for (size_t i = 0; i < du.terms.size(); ++i) {
      const auto& term = du.terms[i];
      const long wi = weight(term.vec.begin()->first);
      for (long n = -z0_order - 1; n <= wi + q - 1; ++n) {
        RVec un = vertex_mode(term.vec, n, w);
        if (un.is_zero()) continue;
        MultiSeries<Rational> prod = zshift[i] * power(-n - 1);
        if (!prod.windows()[1].contains(Rational(z0_order)))
          throw WindowViolation("conjugation check exceeds the z0 truncation");
        for (const auto& [e, c] : prod.terms()) {
          long t = e[1].to_long();
          if (t < tlo || t > z0_order) continue;
          zvec_add(side[t], e[0], un, -c);
        }
      }
    }
    for (auto& [t, r] : side) {
      ++res.coefficients_checked;
      if (!r.empty()) res.nonzero.emplace(std::make_pair(pw, t), r);
    }
  }
  return res;
}

}  // namespace permtwist
