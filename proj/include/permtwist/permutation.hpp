#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permtwist/twist.hpp"

namespace permtwist {

struct CycleParseError : std::invalid_argument {
  CycleParseError(const std::string& what, size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  size_t position;
};

// Bijection of {1..k}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);
  // Cycle notation such as "(1 3)(2)". Fixed points may be omitted; k is the
  // largest entry unless a larger k is given.
  static Permutation parse(const std::string& s, int k = 0);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& images() const { return img_; }
  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  Permutation pow(long e) const;
  int order() const;
  // Cycles ordered by their minimum, each listed from its minimum, fixed
  // points included.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int k);

struct CycleDecomposition {
  std::vector<int> lengths;
  // h maps the block b+1..b+k_i onto the i-th cycle: h(b+t) = g^{t-1}(min).
  Permutation h;
  // g'_i = (b+1 b+2 ... b+k_i)
  std::vector<Permutation> blocks;
  std::vector<int> offsets;

  Permutation canonical() const;
  // h g'_1 ... g'_p h^{-1}
  Permutation reconstruct() const;
};

CycleDecomposition decompose(const Permutation& g);

// Moves the content of slot i to slot h(i).
TensorState conjugate_action(const Permutation& h, const TensorState& v);

// Basis of the assembled module: one Fock basis vector per cycle.
using ModuleKey = std::vector<Partition>;
using ModuleVec = LinComb<ModuleKey, Cyclotomic>;

// h o (T^{k_1}(V) (x) ... (x) T^{k_p}(V)) for g = h g'_1 ... g'_p h^{-1}:
// Y_g(v, z) = Y_{g'}(h^{-1} v, z), and Y_{g'} acts factorwise on the blocks.
class AssembledModule {
 public:
  explicit AssembledModule(const Permutation& g);

  const Permutation& permutation() const { return g_; }
  const CycleDecomposition& decomposition() const { return dec_; }
  int k() const { return g_.size(); }
  // Lcm of the cycle lengths; modes live in (1/order)Z.
  int order() const { return order_; }

  Rational grade(const ModuleKey& w) const;
  // Basis vectors with grade <= cap, by increasing grade.
  std::vector<ModuleKey> basis(const Rational& cap) const;
  // Graded dimensions through the given grade, counted from grade 0.
  std::vector<std::pair<Rational, long>> graded_dimensions(const Rational& cap) const;

  ModuleVec mode(const TensorState& v, const Rational& m, const ModuleKey& w) const;
  ModuleVec mode(const TensorState& v, const Rational& m, const ModuleVec& w) const;

 private:
  ModuleVec block_mode(const TensorKey& key, const Rational& m, const ModuleKey& w) const;

  Permutation g_;
  CycleDecomposition dec_;
  int order_ = 1;
};

// Y_g(g v)_m - eta_L^{L(m+1)} Y_g(v)_m, L the order of g, over basis vectors
// of grade <= cap.
CheckResult check_twisted_monodromy(const AssembledModule& mod, const TensorState& v, const Rational& radius,
                                    const Rational& cap);

// q-expansion as (exponent, coefficient), increasing exponents.
using QSeries = std::vector<std::pair<Rational, Rational>>;

// Product over cycles of q^{(k_i^2-1) c / (24 k_i)} sum_n p(n) q^{n/k_i};
// the first `terms` exponents.
QSeries twisted_character(const Permutation& g, const Rational& c, int terms);

}  // namespace permtwist
