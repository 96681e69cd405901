#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permtwist/rational.hpp"

namespace permtwist {

// Unset (-1) fields take per-suite defaults.
struct VerifyParams {
  int k = 2;
  int cap = -1;
  int order = -1;
  int depth = -1;
  Rational c = Rational(1);
};

struct VerifyItem {
  std::string identity;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string window;
  bool residual_zero = true;
  // Negative checks expect a nonzero residual.
  bool expect_zero = true;
  long checked = 0;
  double elapsed = 0;
  std::vector<std::string> samples;

  bool passed() const { return residual_zero == expect_zero; }
};

// Suites in declaration order; "all" runs every other suite in this order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite.
std::vector<VerifyItem> run_suite(const std::string& name, const VerifyParams& p);

}  // namespace permtwist
