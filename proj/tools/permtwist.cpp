// Command-line front end: coefficient tables, Delta_k expansions, twisted
// modes, characters and the verification suites.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "permtwist/delta.hpp"
#include "permtwist/derivation.hpp"
#include "permtwist/permutation.hpp"
#include "permtwist/twist.hpp"
#include "permtwist/verify.hpp"

using json = nlohmann::ordered_json;
using namespace permtwist;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.to_string());
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

template <class S>
json to_json(const FockVec<S>& v) {
  json out = json::array();
  for (const auto& [p, c] : v) out.push_back({{"state", to_string(p)}, {"coeff", to_json(c)}});
  return out;
}

// "vac", "omega", or comma-separated parts such as "2,1".
RVec parse_state(const std::string& s) {
  if (s == "vac" || s.empty()) return vacuum();
  if (s == "omega") return omega();
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad state '" + s + "': expected vac, omega or parts like 2,1");
    }
  }
  return fock_state(parts);
}

// Slots separated by '|', e.g. "1|vac|2,1".
TensorState parse_tensor(const std::string& s) {
  std::vector<RVec> slots;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '|')) slots.push_back(parse_state(tok));
  if (!s.empty() && s.back() == '|') slots.push_back(vacuum());
  return tensor_product(slots);
}

Rational parse_rational(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
}

void require_k(int k) {
  if (k < 1) throw UsageError("k must be at least 1");
}

json mode_matrix_json(const ModeMatrix<Cyclotomic>& m) {
  json cols = json::array();
  for (const auto& [p, v] : m.columns) cols.push_back({{"source", to_string(p)}, {"image", to_json(v)}});
  return {{"mode", to_json(m.mode)}, {"source_weights", {m.src_lo, m.src_hi}}, {"columns", cols}};
}

json params_json(const std::vector<std::pair<std::string, std::string>>& ps) {
  json o = json::object();
  for (const auto& [k, v] : ps) o[k] = v;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact permutation-orbifold twisted modules of the free boson"};
  app.require_subcommand(1);
  bool pretty = false, as_json = true;
  app.add_flag("--pretty", pretty, "Indented JSON");
  app.add_flag("--json", as_json, "Compact JSON (default)");

  // One variable per subcommand: default_val() assigns at setup time.
  int k = 2, coeff_depth = 4, delta_depth = -1, mode_cap = 3, cap = -1, order = -1, depth = -1, terms = 8, slot = 1,
      branch = 0;
  std::string c_text = "1", suite, u_text = "1", tensor_text, m_text = "0", g_text;
  bool inverse = false, functor = false;

  auto* coeffs = app.add_subcommand("coeffs", "a_j coefficients of the Delta_k operator");
  coeffs->add_option("--k", k, "Twist order")->default_val(2);
  coeffs->add_option("--depth", coeff_depth, "Number of coefficients")->default_val(4);

  auto* delta = app.add_subcommand("delta", "Delta_k(z) u or its inverse");
  delta->add_option("--k", k, "Twist order")->default_val(2);
  delta->add_option("--u", u_text, "State: vac, omega, or parts like 2,1")->default_val("1");
  delta->add_option("--depth", delta_depth, "Keep terms i <= depth");
  delta->add_flag("--inverse", inverse, "Apply Delta_k(z)^-1");

  auto* mode = app.add_subcommand("mode", "Matrix of a twisted mode on the truncated Fock space");
  mode->add_option("--k", k, "Twist order")->default_val(2);
  mode->add_option("--u", u_text, "Generator state")->default_val("1");
  mode->add_option("--slot", slot, "Tensor slot of the generator")->default_val(1);
  mode->add_option("--tensor", tensor_text, "Tensor state, slots separated by |");
  mode->add_option("--m", m_text, "Mode index p/q")->default_val("0");
  mode->add_option("--cap", mode_cap, "Largest source weight")->default_val(3);
  mode->add_flag("--functor", functor, "Mode of Y_U on U(M) instead (integer m)");
  mode->add_option("--branch", branch, "Branch (z^k)^{1/k} = eta^branch z for --functor")->default_val(0);

  auto* character = app.add_subcommand("character", "Twisted character of a permutation");
  character->add_option("--g", g_text, "Cycle notation, e.g. \"(1 2)(3)\"")->required();
  character->add_option("--k", k, "Degree, if larger than the largest entry");
  character->add_option("--c", c_text, "Central charge")->default_val("1");
  character->add_option("--terms", terms, "Number of terms")->default_val(8);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
  verify->add_option("--suite", suite, "One of: " + names)->required();
  verify->add_option("--k", k, "Twist order")->default_val(2);
  verify->add_option("--cap", cap, "Weight cap");
  verify->add_option("--order", order, "Series order or mode radius");
  verify->add_option("--depth", depth, "Depth or largest state weight");
  verify->add_option("--c", c_text, "Central charge")->default_val("1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const int indent = pretty ? 2 : -1;
  (void)as_json;

  try {
    json out;
    int rc = 0;
    if (*coeffs) {
      require_k(k);
      if (coeff_depth < 1) throw UsageError("depth must be at least 1");
      auto a = solve_a_coeffs(k, coeff_depth).a;
      out = json::array();
      for (int j = 1; j <= coeff_depth; ++j) out.push_back({{"j", j}, {"value", to_json(a[j - 1])}});
    } else if (*delta) {
      require_k(k);
      RVec u = parse_state(u_text);
      if (!is_homogeneous(u) || u.is_zero()) throw UsageError("u must be homogeneous");
      auto d = inverse ? delta_inverse_apply(k, u, delta_depth) : delta_apply(k, u, delta_depth);
      out = json::array();
      for (const auto& t : d.terms)
        out.push_back({{"i", t.i}, {"exponent", to_json(t.exponent)}, {"vector", to_json(t.vec)}});
    } else if (*mode) {
      require_k(k);
      if (mode_cap < 0) throw UsageError("cap must be nonnegative");
      Rational m = parse_rational(m_text, "mode index");
      ModeMatrix<Cyclotomic> mat;
      if (functor) {
        if (!m.is_integer()) throw UsageError("Y_U modes are integers");
        mat = u_functor_mode(k, parse_state(u_text), m.to_long(), mode_cap, branch);
      } else {
        if (!(m * Rational(k)).is_integer()) throw UsageError("mode index must lie in (1/k)Z");
        if (!tensor_text.empty()) {
          TensorState v = parse_tensor(tensor_text);
          if (v.begin()->first.size() != static_cast<size_t>(k)) throw UsageError("tensor needs k slots");
          mat = tensor_mode(k, v, m, mode_cap);
        } else {
          if (slot < 1 || slot > k) throw UsageError("slot must be in 1..k");
          mat = generator_slot_mode(k, parse_state(u_text), slot, m, mode_cap);
        }
      }
      out = {{"k", k}, {"matrix", mode_matrix_json(mat)}};
    } else if (*character) {
      Permutation g;
      try {
        g = Permutation::parse(g_text, character->count("--k") ? k : 0);
      } catch (const CycleParseError& e) {
        throw UsageError(std::string("cycle notation: ") + e.what());
      }
      if (terms < 0) throw UsageError("terms must be nonnegative");
      auto ch = twisted_character(g, parse_rational(c_text, "central charge"), terms);
      out = json::array();
      for (const auto& [e, c] : ch) out.push_back({{"exponent", to_json(e)}, {"coeff", to_json(c)}});
    } else if (*verify) {
      require_k(k);
      if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'; expected one of: " + names);
      VerifyParams p;
      p.k = k;
      p.cap = cap;
      p.order = order;
      p.depth = depth;
      p.c = parse_rational(c_text, "central charge");
      out = json::array();
      for (const auto& it : run_suite(suite, p)) {
        json item = {{"identity_id", it.identity},
                     {"anchor", it.anchor},
                     {"parameters", params_json(it.parameters)},
                     {"status", it.passed() ? "pass" : "fail"},
                     {"residual_summary", it.residual_zero ? "zero" : "nonzero"},
                     {"expected", it.expect_zero ? "zero" : "nonzero"},
                     {"window", it.window},
                     {"checked", it.checked},
                     {"elapsed", it.elapsed}};
        if (!it.samples.empty()) item["nonzero_at"] = it.samples;
        out.push_back(item);
        if (!it.passed()) rc = 1;
      }
    }
    std::cout << out.dump(indent) << "\n";
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
