#include "permtwist/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace permtwist {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x : img_) {
    if (x < 1 || x > size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& s, int k) {
  std::vector<std::vector<int>> cycles;
  std::set<int> used;
  size_t i = 0;
  const size_t n = s.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == n) throw CycleParseError("empty permutation", i);
  while (i < n) {
    if (s[i] != '(') throw CycleParseError("expected '('", i);
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      if (i == n) throw CycleParseError("unterminated cycle", i);
      if (s[i] == ')') {
        if (cyc.empty()) throw CycleParseError("empty cycle", i);
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw CycleParseError("expected a positive integer", i);
      const size_t start = i;
      long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) throw CycleParseError("entry too large", start);
        ++i;
      }
      if (v < 1) throw CycleParseError("entries start at 1", start);
      if (!used.insert(static_cast<int>(v)).second) throw CycleParseError("repeated entry", start);
      cyc.push_back(static_cast<int>(v));
      if (i < n && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != ')')
        throw CycleParseError("expected a space or ')'", i);
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  const int top = *used.rbegin();
  if (k == 0) k = top;
  if (k < top) throw CycleParseError("entry exceeds k", s.size());
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 1);
  for (const auto& c : cycles)
    for (size_t j = 0; j < c.size(); ++j) img[c[j] - 1] = c[(j + 1) % c.size()];
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations of different degree");
  std::vector<int> v(a.size());
  for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= size(); ++i) v[img_[i - 1] - 1] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  Permutation r = identity(size());
  for (long t = 0; t < std::labs(e); ++t) r = base * r;
  return r;
}

int Permutation::order() const {
  int l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, static_cast<int>(c.size()));
  return l;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size() + 1, false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int x = i; !seen[x]; x = (*this)(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += "(";
    for (size_t j = 0; j < c.size(); ++j) s += (j ? " " : "") + std::to_string(c[j]);
    s += ")";
  }
  return s;
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation CycleDecomposition::canonical() const {
  Permutation r = Permutation::identity(h.size());
  for (const auto& b : blocks) r = b * r;
  return r;
}

Permutation CycleDecomposition::reconstruct() const { return h * canonical() * h.inverse(); }

CycleDecomposition decompose(const Permutation& g) {
  CycleDecomposition d;
  const int k = g.size();
  std::vector<int> himg(k);
  int b = 0;
  for (const auto& c : g.cycles()) {
    const int len = static_cast<int>(c.size());
    d.lengths.push_back(len);
    d.offsets.push_back(b);
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 1);
    for (int t = 1; t <= len; ++t) {
      himg[b + t - 1] = c[t - 1];
      img[b + t - 1] = b + (t % len) + 1;
    }
    d.blocks.emplace_back(std::move(img));
    b += len;
  }
  d.h = Permutation(std::move(himg));
  return d;
}

TensorState conjugate_action(const Permutation& h, const TensorState& v) {
  TensorState out;
  for (const auto& [key, c] : v) {
    if (static_cast<int>(key.size()) != h.size()) throw std::invalid_argument("tensor state has wrong number of slots");
    TensorKey moved(key.size());
    for (int i = 1; i <= h.size(); ++i) moved[h(i) - 1] = key[i - 1];
    out.add(moved, c);
  }
  return out;
}

AssembledModule::AssembledModule(const Permutation& g) : g_(g), dec_(decompose(g)), order_(g.order()) {
  if (g.size() < 1 || g.size() > 4) throw std::out_of_range("assembled modules are limited to k <= 4");
}

Rational AssembledModule::grade(const ModuleKey& w) const {
  Rational s;
  for (size_t i = 0; i < w.size(); ++i) s += Rational(weight(w[i]), dec_.lengths[i]);
  return s;
}

std::vector<ModuleKey> AssembledModule::basis(const Rational& cap) const {
  std::vector<ModuleKey> out;
  const size_t p = dec_.lengths.size();
  ModuleKey cur(p);
  std::function<void(size_t, Rational)> rec = [&](size_t i, Rational left) {
    if (i == p) {
      out.push_back(cur);
      return;
    }
    const int ki = dec_.lengths[i];
    for (int n = 0; Rational(n, ki) <= left; ++n)
      for (const auto& part : partitions(n)) {
        cur[i] = part;
        rec(i + 1, left - Rational(n, ki));
      }
  };
  rec(0, cap);
  std::stable_sort(out.begin(), out.end(),
                   [&](const ModuleKey& a, const ModuleKey& b) { return grade(a) < grade(b); });
  return out;
}

std::vector<std::pair<Rational, long>> AssembledModule::graded_dimensions(const Rational& cap) const {
  std::map<Rational, long> dims;
  for (const auto& w : basis(cap)) ++dims[grade(w)];
  return {dims.begin(), dims.end()};
}

ModuleVec AssembledModule::mode(const TensorState& v, const Rational& m, const ModuleKey& w) const {
  if (w.size() != dec_.lengths.size()) throw std::invalid_argument("module vector has wrong number of factors");
  ModuleVec out;
  for (const auto& [key, c] : conjugate_action(dec_.h.inverse(), v)) out.axpy(c, block_mode(key, m, w));
  return out;
}

ModuleVec AssembledModule::mode(const TensorState& v, const Rational& m, const ModuleVec& w) const {
  ModuleVec out;
  for (const auto& [key, c] : w) out.axpy(c, mode(v, m, key));
  return out;
}

// (a (x) b)_m = sum_{m1 + m2 = m - 1} a_{m1} (x) b_{m2}, extended to p factors;
// a factor's mode vanishes above grade + weight - 1.
ModuleVec AssembledModule::block_mode(const TensorKey& key, const Rational& m, const ModuleKey& w) const {
  const size_t p = dec_.lengths.size();
  std::vector<FieldPtr> fields;
  std::vector<Rational> top;
  for (size_t i = 0; i < p; ++i) {
    const int ki = dec_.lengths[i];
    TensorKey sub(key.begin() + dec_.offsets[i], key.begin() + dec_.offsets[i] + ki);
    FieldPtr f = tensor_field(ki, TensorState(sub, Cyclotomic(1)));
    top.push_back(Rational(weight(w[i]), ki) + Rational(f->weight() - 1));
    fields.push_back(std::move(f));
  }
  std::vector<Rational> tail(p + 1);
  for (size_t i = p; i-- > 0;) tail[i] = tail[i + 1] + top[i];

  ModuleVec out;
  std::function<void(size_t, Rational, const ModuleVec&)> rec = [&](size_t i, Rational rem, const ModuleVec& acc) {
    const int ki = dec_.lengths[i];
    auto extend = [&](const Rational& mi) {
      const CVec& v = fields[i]->on_basis(mi, w[i]);
      if (v.is_zero()) return;
      ModuleVec next;
      for (const auto& [prefix, c] : acc)
        for (const auto& [part, d] : v) {
          ModuleKey k2 = prefix;
          k2.push_back(part);
          next.add(k2, c * d);
        }
      if (i + 1 == p) out += next;
      else rec(i + 1, rem - mi, next);
    };
    if (i + 1 == p) {
      if ((rem * Rational(ki)).is_integer() && rem <= top[i]) extend(rem);
      return;
    }
    const Rational lo = rem - tail[i + 1];
    for (Rational mi = Rational((lo * Rational(ki)).ceil()) / Rational(ki); mi <= top[i]; mi += Rational(1, ki))
      extend(mi);
  };
  rec(0, m - Rational(static_cast<long>(p) - 1), ModuleVec(ModuleKey{}, Cyclotomic(1)));
  return out;
}

CheckResult check_twisted_monodromy(const AssembledModule& mod, const TensorState& v, const Rational& radius,
                                    const Rational& cap) {
  CheckResult res;
  const int L = mod.order();
  const TensorState gv = conjugate_action(mod.permutation(), v);
  const auto basis = mod.basis(cap);
  for (const auto& m : mode_window(L, radius)) {
    const Cyclotomic phase = eta_pow(L, (Rational(L) * (m + Rational(1))).to_long());
    for (const auto& w : basis) {
      ModuleVec r = mod.mode(gv, m, w);
      r.axpy(-phase, mod.mode(v, m, w));
      std::string where = "m=" + m.to_string();
      res.record_zero(where, r.is_zero());
    }
  }
  return res;
}

QSeries twisted_character(const Permutation& g, const Rational& c, int terms) {
  if (terms <= 0) return {};
  const auto lengths = decompose(g).lengths;
  const int K = *std::max_element(lengths.begin(), lengths.end());
  // The longest cycle alone supplies every exponent shift + n/K, so the
  // first `terms` exponents lie within (terms - 1)/K of the leading one.
  const Rational bound(terms - 1, K);
  std::map<Rational, Rational> acc{{Rational(0), Rational(1)}};
  Rational shift;
  for (int ki : lengths) {
    shift += Rational(ki * ki - 1) * c / Rational(24 * ki);
    std::map<Rational, Rational> next;
    for (const auto& [e, a] : acc)
      for (int n = 0; e + Rational(n, ki) <= bound; ++n) next[e + Rational(n, ki)] += a * Rational(partition_count(n));
    acc = std::move(next);
  }
  QSeries out;
  for (const auto& [e, a] : acc) {
    if (static_cast<int>(out.size()) == terms) break;
    out.emplace_back(e + shift, a);
  }
  return out;
}

}  // namespace permtwist
