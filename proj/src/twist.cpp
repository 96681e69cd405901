#include "permtwist/twist.hpp"

#include <stdexcept>

namespace permtwist {

Cyclotomic eta(int k) { return Cyclotomic::root_of_unity(k, -1); }

Cyclotomic eta_pow(int k, long e) { return Cyclotomic::root_of_unity(k, -e); }

Rational lg0_eigenvalue(int k, long n, const Rational& c) {
  return Rational(n) / Rational(k) + Rational(k * k - 1) * c / Rational(24 * k);
}

namespace {

long to_index(const Rational& r, const char* what) {
  if (!r.is_integer()) throw std::invalid_argument(std::string(what) + " is not integral: " + r.to_string());
  return r.to_long();
}

Rational grade(int k, const Partition& w) { return Rational(weight(w), k); }

CVec basis_vec(const Partition& p) { return CVec(p, Cyclotomic(1)); }

int wrap_slot(int k, long s) { return static_cast<int>(((s - 1) % k + k) % k) + 1; }

}  // namespace

int mode_coset(int k, const Rational& m) {
  long km = to_index(m * Rational(k), "k * mode");
  return static_cast<int>(((km % k) + k) % k);
}

TensorState tensor_vacuum(int k) { return TensorState(TensorKey(k), Cyclotomic(1)); }

TensorState tensor_product(const std::vector<RVec>& slots) {
  TensorState acc(TensorKey{}, Cyclotomic(1));
  for (const auto& v : slots) {
    TensorState next;
    for (const auto& [key, c] : acc)
      for (const auto& [p, d] : v) {
        TensorKey k2 = key;
        k2.push_back(p);
        next.add(k2, c * Cyclotomic(d));
      }
    acc = std::move(next);
  }
  return acc;
}

TensorState slot_state(int k, const RVec& u, int j) {
  if (j < 1 || j > k) throw std::out_of_range("slot out of range");
  std::vector<RVec> slots(k, vacuum());
  slots[j - 1] = u;
  return tensor_product(slots);
}

int tensor_weight(const TensorState& v) {
  if (v.is_zero()) throw std::invalid_argument("zero tensor has no weight");
  int w = -1;
  for (const auto& [key, c] : v) {
    int s = 0;
    for (const auto& p : key) s += weight(p);
    if (w >= 0 && s != w) throw std::invalid_argument("tensor state is not homogeneous");
    w = s;
  }
  return w;
}

const CVec& Field::on_basis(const Rational& m, const Partition& w) const {
  auto key = std::make_pair(m, w);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  CVec v = compute(m, w);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.try_emplace(std::move(key), std::move(v)).first->second;
}

CVec Field::apply(const Rational& m, const CVec& w) const {
  CVec out;
  for (const auto& [p, c] : w) out.axpy(c, on_basis(m, p));
  return out;
}

namespace {

class IdentityField : public Field {
 public:
  explicit IdentityField(int k) : Field(k, 0) {}

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    return m == Rational(-1) ? basis_vec(w) : CVec();
  }
};

class ZeroField : public Field {
 public:
  using Field::Field;

 protected:
  CVec compute(const Rational&, const Partition&) const override { return {}; }
};

// u^slot_m = eta^{(slot-1) k (m+1)} sum_i u(i)_{k(e_i + m + 1) - 1}
class GeneratorField : public Field {
 public:
  GeneratorField(int k, const RVec& u, int slot)
      : Field(k, homogeneous_weight(u)), slot_(slot), delta_(delta_apply(k, u)) {
    if (slot < 1 || slot > k) throw std::out_of_range("slot out of range");
  }

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    const int k = this->k();
    const Rational shift = m + Rational(1);
    const long km1 = to_index(shift * Rational(k), "k * mode");
    RVec acc;
    const RVec src(w, Rational(1));
    for (const auto& t : delta_.terms) {
      long n = to_index(Rational(k) * (t.exponent + shift), "untwisted index") - 1;
      acc += vertex_mode(t.vec, n, src);
    }
    CVec out = to_cyclotomic(acc);
    if (slot_ != 1) out *= eta_pow(k, (slot_ - 1) * km1);
    return out;
  }

 private:
  int slot_;
  DeltaExpansion delta_;
};

// Locality of order N turns the double residue into
// (a_q b)_M w = sum_e C(e, S) sum_r C(N, r) (-1)^r a_{N-r-e-1} b_{r+M+e-S} w,
// S = N - q - 1, e over (1/k)Z. The coset of e pairs each eigencomponent of
// a with its own kernel exponent. Grades bound e to a finite range.
class ProductField : public Field {
 public:
  ProductField(FieldPtr a, FieldPtr b, long q, int n)
      : Field(a->k(), static_cast<int>(a->weight() + b->weight() - q - 1)),
        a_(std::move(a)), b_(std::move(b)), q_(q), n_(n) {}

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    const int k = this->k();
    const long s = n_ - q_ - 1;
    CVec out;
    if (s < 0) return out;
    const Rational h = grade(k, w);
    const Rational A(a_->weight()), B(b_->weight());
    const Rational step(1, k);
    const Rational lo = -h - A;
    const Rational hi = Rational(s) - m - Rational(1) + h + B;
    const CVec src = basis_vec(w);
    for (Rational e = lo; e <= hi; e += step) {
      Rational ce = binomial(e, s);
      if (ce.is_zero()) continue;
      for (long r = 0; r <= n_; ++r) {
        const Rational nu = Rational(r) + m + e - Rational(s);
        if (h + B - nu - Rational(1) < Rational(0)) continue;
        const CVec& bw = b_->on_basis(nu, w);
        if (bw.is_zero()) continue;
        Rational c = ce * binomial(Rational(n_), r);
        if (r % 2) c = -c;
        out.axpy(Cyclotomic(c), a_->apply(Rational(n_ - r - 1) - e, bw));
      }
    }
    return out;
  }

 private:
  FieldPtr a_, b_;
  long q_;
  long n_;
};

class CosetField : public Field {
 public:
  CosetField(FieldPtr a, int p) : Field(a->k(), a->weight()), a_(std::move(a)), p_(p) {}

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    return mode_coset(k(), m) == p_ ? a_->on_basis(m, w) : CVec();
  }

 private:
  FieldPtr a_;
  int p_;
};

class SumField : public Field {
 public:
  SumField(int k, int weight, std::vector<std::pair<Cyclotomic, FieldPtr>> parts)
      : Field(k, weight), parts_(std::move(parts)) {}

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    CVec out;
    for (const auto& [c, f] : parts_) out.axpy(c, f->on_basis(m, w));
    return out;
  }

 private:
  std::vector<std::pair<Cyclotomic, FieldPtr>> parts_;
};

// Y_U(u, z): mode n collects (F_s u)^1_mu with k e_s - k(mu + 1) = -n - 1.
class UFunctorField : public Field {
 public:
  UFunctorField(int k, const RVec& u, int branch)
      : Field(1, homogeneous_weight(u)), twist_(k), branch_(branch) {
    for (const auto& t : delta_inverse_apply(k, u).terms)
      terms_.emplace_back(t.exponent, generator_field(k, t.vec, 1));
  }

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    const long n = to_index(m, "mode");
    const int k = twist_;
    CVec out;
    for (const auto& [e, f] : terms_) {
      Rational mu = e + Rational(n + 1, k) - Rational(1);
      CVec v = f->on_basis(mu, w);
      if (branch_ != 0) {
        long power = to_index(Rational(k) * (e - mu - Rational(1)), "branch exponent");
        v *= eta_pow(k, branch_ * power);
      }
      out += v;
    }
    return out;
  }

 private:
  int twist_;
  int branch_;
  std::vector<std::pair<Rational, FieldPtr>> terms_;
};

// Ybar'(u, z) = Y_U(Delta_k(z) u, z^{1/k}) on the principal branch.
class TOfUField : public Field {
 public:
  TOfUField(int k, const RVec& u) : Field(k, homogeneous_weight(u)) {
    for (const auto& t : delta_apply(k, u).terms) terms_.emplace_back(t.exponent, u_functor_field(k, t.vec, 0));
  }

 protected:
  CVec compute(const Rational& m, const Partition& w) const override {
    const int k = this->k();
    CVec out;
    for (const auto& [e, f] : terms_) {
      long n = to_index(Rational(k) * (e + m + Rational(1)), "untwisted index") - 1;
      out += f->on_basis(Rational(n), w);
    }
    return out;
  }

 private:
  std::vector<std::pair<Rational, FieldPtr>> terms_;
};

FieldPtr basis_generator(int k, const Partition& p, int slot) {
  static std::mutex mu;
  static std::map<std::tuple<int, Partition, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(k, p, slot);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f = std::make_shared<GeneratorField>(k, RVec(p, Rational(1)), slot);
  cache.emplace(key, f);
  return f;
}

FieldPtr pure_tensor_field(int k, const TensorKey& key) {
  static std::mutex mu;
  static std::map<std::pair<int, TensorKey>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, key});
    if (it != cache.end()) return it->second;
  }
  FieldPtr f;
  for (int s = 1; s <= k; ++s) {
    const Partition& p = key[s - 1];
    if (p.empty()) continue;
    FieldPtr g = basis_generator(k, p, s);
    f = f ? product_field(g, f, -1) : g;
  }
  if (!f) f = identity_field(k);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(k, key), f);
  return f;
}

}  // namespace

FieldPtr identity_field(int k) { return std::make_shared<IdentityField>(k); }

FieldPtr zero_field(int k, int weight) { return std::make_shared<ZeroField>(k, weight); }

FieldPtr generator_field(int k, const RVec& u, int slot) {
  if (u.is_zero()) return zero_field(k, 0);
  return std::make_shared<GeneratorField>(k, u, slot);
}

FieldPtr product_field(FieldPtr a, FieldPtr b, long q, int locality) {
  if (a->k() != b->k()) throw std::invalid_argument("fields of different twist order");
  const long w = a->weight() + b->weight() - q - 1;
  if (w < 0) return zero_field(a->k(), 0);
  const int n = locality < 0 ? a->weight() + b->weight() : locality;
  return std::make_shared<ProductField>(std::move(a), std::move(b), q, n);
}

FieldPtr coset_field(FieldPtr a, int p) { return std::make_shared<CosetField>(std::move(a), p); }

FieldPtr sum_field(int k, int weight, std::vector<std::pair<Cyclotomic, FieldPtr>> parts) {
  return std::make_shared<SumField>(k, weight, std::move(parts));
}

FieldPtr tensor_field(int k, const TensorState& v) {
  if (v.is_zero()) return zero_field(k, 0);
  const int wt = tensor_weight(v);
  std::vector<std::pair<Cyclotomic, FieldPtr>> parts;
  for (const auto& [key, c] : v) {
    if (static_cast<int>(key.size()) != k) throw std::invalid_argument("tensor state has wrong number of slots");
    parts.emplace_back(c, pure_tensor_field(k, key));
  }
  if (parts.size() == 1 && parts[0].first == Cyclotomic(1)) return parts[0].second;
  return sum_field(k, wt, std::move(parts));
}

FieldPtr u_functor_field(int k, const RVec& u, int branch) {
  if (u.is_zero()) return zero_field(1, 0);
  return std::make_shared<UFunctorField>(k, u, branch);
}

FieldPtr t_of_u_field(int k, const RVec& u) {
  if (u.is_zero()) return zero_field(k, 0);
  return std::make_shared<TOfUField>(k, u);
}

ModeMatrix<Cyclotomic> field_mode_matrix(const FieldPtr& f, const Rational& m, int weight_cap) {
  return build_mode_matrix<Cyclotomic>(m, 0, weight_cap, [&](const CVec& v) { return f->apply(m, v); });
}

ModeMatrix<Cyclotomic> ybar_mode(int k, const RVec& u, const Rational& m, int weight_cap) {
  return generator_slot_mode(k, u, 1, m, weight_cap);
}

ModeMatrix<Cyclotomic> generator_slot_mode(int k, const RVec& u, int slot, const Rational& m, int weight_cap) {
  mode_coset(k, m);
  return field_mode_matrix(generator_field(k, u, slot), m, weight_cap);
}

ModeMatrix<Cyclotomic> tensor_mode(int k, const TensorState& v, const Rational& m, int weight_cap) {
  mode_coset(k, m);
  return field_mode_matrix(tensor_field(k, v), m, weight_cap);
}

ModeMatrix<Cyclotomic> u_functor_mode(int k, const RVec& u, long m, int weight_cap, int branch) {
  return field_mode_matrix(u_functor_field(k, u, branch), Rational(m), weight_cap);
}

void CheckResult::record_zero(const std::string& where, bool zero) {
  ++checked;
  if (zero) return;
  ++nonzero;
  if (samples.size() < 5) samples.push_back(where);
}

void CheckResult::merge(const CheckResult& o) {
  checked += o.checked;
  nonzero += o.nonzero;
  for (const auto& s : o.samples)
    if (samples.size() < 5) samples.push_back(s);
}

std::vector<Rational> mode_window(int k, const Rational& radius) {
  std::vector<Rational> out;
  const Rational step(1, k);
  mpz_class lo = (-radius * Rational(k)).ceil();
  for (Rational m = Rational(lo) / Rational(k); m <= radius; m += step) out.push_back(m);
  return out;
}

namespace {

std::string where(const Rational& m, const Partition& w) { return "m=" + m.to_string() + " w=" + to_string(w); }

std::string where(const Rational& m, const Rational& n, const Partition& w) {
  return "m=" + m.to_string() + " n=" + n.to_string() + " w=" + to_string(w);
}

}  // namespace

CheckResult check_derivative(int k, const RVec& u, const Rational& radius, int weight_cap) {
  CheckResult res;
  FieldPtr f = generator_field(k, u, 1);
  FieldPtr d = generator_field(k, virasoro_mode(-1, u), 1);
  for (const auto& m : mode_window(k, radius))
    for (const auto& w : basis_upto(0, weight_cap)) {
      CVec r = d->on_basis(m, w);
      r.axpy(Cyclotomic(m), f->on_basis(m - Rational(1), w));
      res.record(where(m, w), r);
    }
  return res;
}

CheckResult check_twisted_commutator(int k, const RVec& u, int i, const RVec& v, int j, const Rational& radius,
                                     int weight_cap) {
  CheckResult res;
  const int A = homogeneous_weight(u), B = homogeneous_weight(v);
  FieldPtr U = generator_field(k, u, i), V = generator_field(k, v, j);
  std::vector<FieldPtr> X;
  for (int l = 0; l < A + B; ++l) X.push_back(generator_field(k, vertex_mode(u, l, v), j));
  const auto window = mode_window(k, radius);
  for (const auto& m : window) {
    const int p = mode_coset(k, m);
    const Cyclotomic pre = eta_pow(k, static_cast<long>(i - j) * p) * Cyclotomic(Rational(1, k));
    for (const auto& n : window)
      for (const auto& w : basis_upto(0, weight_cap)) {
        const CVec bw = basis_vec(w);
        CVec r = U->apply(m, V->on_basis(n, w)) - V->apply(n, U->on_basis(m, w));
        for (int l = 0; l < A + B; ++l) {
          Rational c = binomial(m, l);
          if (c.is_zero()) continue;
          r.axpy(-pre * Cyclotomic(c), X[l]->on_basis(m + n - Rational(l), w));
        }
        res.record(where(m, n, w), r);
      }
  }
  return res;
}

namespace {

// (u^a)_n v^j in the tensor power.
TensorState slot_product(int k, const RVec& u, int a, long n, const RVec& v, int j) {
  if (a == j) {
    RVec x = vertex_mode(u, n, v);
    return x.is_zero() ? TensorState() : slot_state(k, x, j);
  }
  RVec x = vertex_mode(u, n, vacuum());
  if (x.is_zero()) return {};
  std::vector<RVec> slots(k, vacuum());
  slots[a - 1] = x;
  slots[j - 1] = v;
  return tensor_product(slots);
}

}  // namespace

CheckResult check_twisted_jacobi(int k, const RVec& u, int i, const RVec& v, int j, const Rational& radius,
                                 int weight_cap) {
  CheckResult res;
  const int A = homogeneous_weight(u), B = homogeneous_weight(v);
  FieldPtr U = generator_field(k, u, i), V = generator_field(k, v, j);
  const long R = radius.floor().get_si();
  // Field of (u_(p))_s v, keyed by (p, s).
  std::map<std::pair<int, long>, FieldPtr> lhs_fields;
  auto lhs_field = [&](int p, long s) -> const FieldPtr& {
    auto it = lhs_fields.find({p, s});
    if (it != lhs_fields.end()) return it->second;
    TensorState st;
    for (int t = 0; t < k; ++t) {
      TensorState piece = slot_product(k, u, wrap_slot(k, i + t), s, v, j);
      st.axpy(eta_pow(k, -static_cast<long>(p) * t) * Cyclotomic(Rational(1, k)), piece);
    }
    return lhs_fields.emplace(std::make_pair(p, s), tensor_field(k, st)).first->second;
  };
  const auto window = mode_window(k, radius);
  for (const auto& m : window) {
    const int p = mode_coset(k, m);
    for (long l = -R; l <= R; ++l)
      for (const auto& n : window)
        for (const auto& w : basis_upto(0, weight_cap)) {
          const Rational h = grade(k, w);
          CVec r;
          for (long t = 0; l + t < A + B; ++t) {
            Rational c = binomial(m, t);
            if (c.is_zero()) continue;
            r.axpy(Cyclotomic(c), lhs_field(p, l + t)->on_basis(m + n - Rational(t), w));
          }
          const Rational top = std::max(h + Rational(B - 1) - n, h + Rational(A - 1) - m);
          const long imax = top.floor().get_si();
          for (long s = 0; s <= imax; ++s) {
            Rational c = binomial(Rational(l), s);
            if (c.is_zero()) continue;
            if (s % 2) c = -c;
            CVec term = U->apply(m + Rational(l - s), V->on_basis(n + Rational(s), w));
            CVec other = V->apply(Rational(l - s) + n, U->on_basis(m + Rational(s), w));
            if (l % 2) term += other;
            else term -= other;
            r.axpy(Cyclotomic(-c), term);
          }
          res.record("l=" + std::to_string(l) + " " + where(m, n, w), r);
        }
  }
  return res;
}

int locality_order(int k, const RVec& u, int i, const RVec& v, int j, int max_order, const Rational& radius,
                   int weight_cap) {
  FieldPtr U = generator_field(k, u, i), V = generator_field(k, v, j);
  const auto window = mode_window(k, radius);
  for (int N = 0; N <= max_order; ++N) {
    bool ok = true;
    for (const auto& m : window) {
      for (const auto& n : window) {
        for (const auto& w : basis_upto(0, weight_cap)) {
          CVec r;
          for (int s = 0; s <= N; ++s) {
            Rational c = binomial(Rational(N), s);
            if (s % 2) c = -c;
            const Rational mm = m + Rational(N - s), nn = n + Rational(s);
            r.axpy(Cyclotomic(c), U->apply(mm, V->on_basis(nn, w)) - V->apply(nn, U->on_basis(mm, w)));
          }
          if (!r.is_zero()) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    if (ok) return N;
  }
  return -1;
}

CheckResult check_lg0(int k, const Rational& c, int weight_cap) {
  CheckResult res;
  std::vector<std::pair<Cyclotomic, FieldPtr>> parts;
  for (int s = 1; s <= k; ++s) parts.emplace_back(Cyclotomic(1), generator_field(k, omega(), s));
  FieldPtr f = sum_field(k, 2, parts);
  for (const auto& w : basis_upto(0, weight_cap)) {
    CVec r = f->on_basis(Rational(1), w);
    r.add(w, -Cyclotomic(lg0_eigenvalue(k, weight(w), c)));
    res.record(to_string(w), r);
  }
  return res;
}

CheckResult check_grading(const FieldPtr& f, const Rational& radius, int weight_cap) {
  CheckResult res;
  const int k = f->k();
  for (const auto& m : mode_window(k, radius))
    for (const auto& w : basis_upto(0, weight_cap)) {
      const Rational target = Rational(weight(w)) + Rational(k) * (Rational(f->weight()) - m - Rational(1));
      CVec r = f->on_basis(m, w);
      if (target.is_integer() && target >= Rational(0)) r -= weight_component(r, static_cast<int>(target.to_long()));
      res.record(where(m, w), r);
    }
  return res;
}

CheckResult check_eigen_support(int k, const RVec& u, int j, const Rational& radius, int weight_cap) {
  CheckResult res;
  const int A = homogeneous_weight(u);
  FieldPtr base = generator_field(k, u, j);
  for (int p = 0; p < k; ++p) {
    std::vector<std::pair<Cyclotomic, FieldPtr>> parts;
    for (int s = 0; s < k; ++s)
      parts.emplace_back(eta_pow(k, -static_cast<long>(p) * s) * Cyclotomic(Rational(1, k)),
                         generator_field(k, u, wrap_slot(k, j + s)));
    FieldPtr e = sum_field(k, A, parts);
    for (const auto& m : mode_window(k, radius))
      for (const auto& w : basis_upto(0, weight_cap)) {
        CVec r = e->on_basis(m, w);
        if (mode_coset(k, m) == p) r -= base->on_basis(m, w);
        res.record("p=" + std::to_string(p) + " " + where(m, w), r);
      }
  }
  return res;
}

CheckResult check_round_trip_ut(int k, const RVec& u, long radius, int weight_cap) {
  CheckResult res;
  FieldPtr f = u_functor_field(k, u, 0);
  for (long n = -radius; n <= radius; ++n)
    for (const auto& w : basis_upto(0, weight_cap)) {
      CVec r = f->on_basis(Rational(n), w) - to_cyclotomic(vertex_mode(u, n, RVec(w, Rational(1))));
      res.record(where(Rational(n), w), r);
    }
  return res;
}

CheckResult check_round_trip_tu(int k, const RVec& u, const Rational& radius, int weight_cap) {
  CheckResult res;
  FieldPtr f = t_of_u_field(k, u), g = generator_field(k, u, 1);
  for (const auto& m : mode_window(k, radius))
    for (const auto& w : basis_upto(0, weight_cap)) res.record(where(m, w), f->on_basis(m, w) - g->on_basis(m, w));
  return res;
}

CheckResult check_u_commutator(int k, const RVec& u, const RVec& v, long radius, int weight_cap, int branch) {
  CheckResult res;
  const int A = homogeneous_weight(u), B = homogeneous_weight(v);
  FieldPtr U = u_functor_field(k, u, branch), V = u_functor_field(k, v, branch);
  std::vector<FieldPtr> X;
  for (int l = 0; l < A + B; ++l) X.push_back(u_functor_field(k, vertex_mode(u, l, v), branch));
  for (long m = -radius; m <= radius; ++m)
    for (long n = -radius; n <= radius; ++n)
      for (const auto& w : basis_upto(0, weight_cap)) {
        const Rational M(m), N(n);
        CVec r = U->apply(M, V->on_basis(N, w)) - V->apply(N, U->on_basis(M, w));
        for (int l = 0; l < A + B; ++l) r.axpy(-Cyclotomic(binomial(M, l)), X[l]->on_basis(M + N - Rational(l), w));
        res.record(where(M, N, w), r);
      }
  return res;
}

CheckResult check_u_derivative(int k, const RVec& u, long radius, int weight_cap, int branch) {
  CheckResult res;
  FieldPtr f = u_functor_field(k, u, branch);
  FieldPtr d = u_functor_field(k, virasoro_mode(-1, u), branch);
  for (long n = -radius; n <= radius; ++n)
    for (const auto& w : basis_upto(0, weight_cap)) {
      CVec r = d->on_basis(Rational(n), w);
      r.axpy(Cyclotomic(Rational(n)), f->on_basis(Rational(n - 1), w));
      res.record(where(Rational(n), w), r);
    }
  return res;
}

CheckResult check_u_associator(int k, const RVec& u, const RVec& v, const Partition& w, int n, long radius) {
  CheckResult res;
  const int A = homogeneous_weight(u), B = homogeneous_weight(v);
  FieldPtr U = u_functor_field(k, u, 0), V = u_functor_field(k, v, 0);
  std::map<long, FieldPtr> X;
  auto x_field = [&](long l) -> const FieldPtr& {
    auto it = X.find(l);
    if (it != X.end()) return it->second;
    return X.emplace(l, u_functor_field(k, vertex_mode(u, l, v), 0)).first->second;
  };
  const long wt = weight(w);
  for (long a = -radius; a <= radius; ++a)
    for (long b = -radius; b <= radius; ++b) {
      // (z0 + z2)^n Y(u, z0 + z2) Y(v, z2) w, expanded in nonnegative powers of z2.
      CVec r;
      for (long j = 0; j <= wt + B + b; ++j) {
        Rational c = binomial(Rational(a + j), j);
        if (c.is_zero()) continue;
        r.axpy(Cyclotomic(c), U->apply(Rational(n - 1 - j - a), V->on_basis(Rational(j - b - 1), w)));
      }
      // (z2 + z0)^n Y(Y(u, z0) v, z2) w, expanded in nonnegative powers of z0.
      for (long i = 0; i <= n; ++i) {
        const long l = i - a - 1;
        if (l >= A + B) continue;
        r.axpy(-Cyclotomic(binomial(Rational(n), i)), x_field(l)->on_basis(Rational(n - i - b - 1), w));
      }
      res.record("a=" + std::to_string(a) + " b=" + std::to_string(b), r);
    }
  return res;
}

int associator_order(int k, const RVec& u, const RVec& v, const Partition& w, int max_n, long radius) {
  for (int n = 0; n <= max_n; ++n)
    if (check_u_associator(k, u, v, w, n, radius).ok()) return n;
  return -1;
}

CheckResult check_generator_symmetry(int k, const RVec& u, int j, const Rational& radius, int weight_cap) {
  CheckResult res;
  FieldPtr f = generator_field(k, u, 1);
  for (const auto& m : mode_window(k, radius)) {
    const long km1 = (Rational(k) * (m + Rational(1))).to_long();
    for (const auto& w : basis_upto(0, weight_cap)) {
      CVec lhs;
      for (const auto& [q, c] : f->on_basis(m, w))
        lhs.add(q, c * eta_pow(k, static_cast<long>(j) * (weight(q) - weight(w))));
      CVec r = lhs;
      r.axpy(-eta_pow(k, -static_cast<long>(j) * km1), f->on_basis(m, w));
      res.record(where(m, w), r);
    }
  }
  return res;
}

}  // namespace permtwist
