#include "permtwist/fock.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace permtwist {

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = std::min(n, maxpart); x >= 1; --x) {
    cur.push_back(x);
    gen_partitions(n - x, x, cur, out);
    cur.pop_back();
  }
}

std::mutex cache_mu;

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static std::map<int, std::vector<Partition>> cache;
  if (n < 0) {
    static const std::vector<Partition> none;
    return none;
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

long partition_count(int n) { return static_cast<long>(partitions(n).size()); }

std::vector<Partition> basis_upto(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = std::max(lo, 0); n <= hi; ++n)
    for (const auto& p : partitions(n)) out.push_back(p);
  return out;
}

RVec vacuum() { return RVec(Partition{}, Rational(1)); }

RVec fock_state(std::vector<int> parts, const Rational& c) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("creation modes must be negative");
  std::sort(parts.rbegin(), parts.rend());
  return RVec(parts, c);
}

RVec omega() { return fock_state({1, 1}, Rational(1, 2)); }

CVec to_cyclotomic(const RVec& v) {
  return v.map_coeffs<Cyclotomic>([](const Rational& r) { return Cyclotomic(r); });
}

int homogeneous_weight(const RVec& v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector has no weight");
  if (!is_homogeneous(v)) throw std::invalid_argument("vector is not homogeneous");
  return weight(v.begin()->first);
}

namespace {

RVec compute_alpha(int n, const Partition& p) {
  RVec out;
  if (n < 0) {
    Partition q = p;
    q.insert(std::upper_bound(q.begin(), q.end(), -n, std::greater<int>()), -n);
    out.add(q, Rational(1));
  } else if (n > 0) {
    long mult = std::count(p.begin(), p.end(), n);
    if (mult > 0) {
      Partition q = p;
      q.erase(std::find(q.begin(), q.end(), n));
      out.add(q, Rational(n * mult));
    }
  }
  return out;
}

RVec apply_alpha(int n, const RVec& v) {
  RVec out;
  for (const auto& [p, c] : v) out.axpy(c, alpha_on_basis(n, p));
  return out;
}

RVec compute_virasoro(int n, const Partition& p) {
  const int w = weight(p);
  RVec out, start(p, Rational(1));
  // L(n) = 1/2 sum_{a+b=n} :alpha(a) alpha(b):, annihilator applied first.
  for (int a = n - w - 1; a <= w + 1; ++a) {
    int b = n - a;
    if (a == 0 || b == 0) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    if (hi > w) continue;
    out.axpy(Rational(1, 2), apply_alpha(lo, apply_alpha(hi, start)));
  }
  return out;
}

// Normal-ordered product of the fields (1/(l-1)!) d^{l-1} alpha(z) for the
// parts l of u: sum over modes (n_i) with sum (n_i + l_i) = m + 1 of
// prod C(-n_i-1, l_i-1) :prod alpha(n_i):.
RVec compute_vertex(const Partition& u, long m, const Partition& v) {
  RVec out;
  const long W = weight(v);
  const long S = m + 1 - weight(u);
  const size_t r = u.size();
  if (r == 0) {
    if (m == -1) out.add(v, Rational(1));
    return out;
  }
  std::vector<long> n(r);
  std::function<void(size_t, long, long)> rec = [&](size_t i, long sum, long possum) {
    if (i == r) {
      if (sum != S) return;
      Rational coef(1);
      for (size_t t = 0; t < r; ++t) coef *= binomial(Rational(-n[t] - 1), u[t] - 1);
      if (coef.is_zero()) return;
      RVec cur(v, Rational(1));
      for (size_t t = 0; t < r && !cur.is_zero(); ++t)
        if (n[t] > 0) cur = apply_alpha(static_cast<int>(n[t]), cur);
      for (size_t t = 0; t < r && !cur.is_zero(); ++t)
        if (n[t] < 0) cur = apply_alpha(static_cast<int>(n[t]), cur);
      out.axpy(coef, cur);
      return;
    }
    const size_t left = r - i - 1;
    for (long x = S - W; x <= W; ++x) {
      if (x == 0) continue;
      long ps = possum + (x > 0 ? x : 0);
      if (ps > W) break;
      long s = sum + x;
      // the remaining slots add at most W - ps and at least S - W each
      if (left == 0 && s != S) continue;
      if (left > 0 && (s + (W - ps) < S || s + static_cast<long>(left) * (S - W) > S)) continue;
      n[i] = x;
      rec(i + 1, s, ps);
    }
  };
  rec(0, 0, 0);
  return out;
}

}  // namespace

const RVec& alpha_on_basis(int n, const Partition& p) {
  static std::map<std::pair<int, Partition>, RVec> cache;
  std::unique_lock<std::mutex> lock(cache_mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  lock.unlock();
  RVec v = compute_alpha(n, p);
  lock.lock();
  return cache.emplace(key, std::move(v)).first->second;
}

const RVec& virasoro_on_basis(int n, const Partition& p) {
  static std::map<std::pair<int, Partition>, RVec> cache;
  std::unique_lock<std::mutex> lock(cache_mu);
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  lock.unlock();
  RVec v = compute_virasoro(n, p);
  lock.lock();
  return cache.emplace(key, std::move(v)).first->second;
}

const RVec& vertex_mode_on_basis(const Partition& u, long m, const Partition& v) {
  static std::map<std::tuple<Partition, long, Partition>, RVec> cache;
  std::unique_lock<std::mutex> lock(cache_mu);
  auto key = std::make_tuple(u, m, v);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  lock.unlock();
  RVec out;
  // Output weight wt v + wt u - m - 1 must be nonnegative.
  if (weight(v) + weight(u) - m - 1 >= 0) out = compute_vertex(u, m, v);
  lock.lock();
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace permtwist
