#pragma once

#include <map>
#include <utility>

namespace permtwist {

// Finite linear combination of keys with scalar coefficients. Zero
// coefficients are never stored.
template <class K, class S>
class LinComb {
 public:
  using Map = std::map<K, S>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  LinComb(const K& key, const S& c) { add(key, c); }

  void add(const K& key, const S& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  S coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? S() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  void erase(const K& key) { terms_.erase(key); }
  void clear() { terms_.clear(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const S& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  // Adds s * o.
  void axpy(const S& s, const LinComb& o) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add(k, s * c);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const S& s, LinComb a) { return a *= s; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  // Map coefficients through a scalar conversion.
  template <class T, class F>
  LinComb<K, T> map_coeffs(F&& f) const {
    LinComb<K, T> out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

 private:
  Map terms_;
};

}  // namespace permtwist
