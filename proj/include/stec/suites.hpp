#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stec/report.hpp"

namespace stec {

struct SuiteConfig {
  std::optional<Signature> sig;  // restrict multi-signature suites when set
  int max_dim = 5;               // exhaustive bound for the algebra suite
  std::uint64_t seed = 0;
  int gauss = 8;
  int cases = 0;  // 0 = per-suite default
  std::string scenario_path;
};

Report run_algebra_suite(const SuiteConfig& cfg);
Report run_derivatives_suite(const SuiteConfig& cfg);
Report run_stokes_suite(const SuiteConfig& cfg);
Report run_maxwell_suite(const SuiteConfig& cfg);

// Dispatch by name (algebra | derivatives | stokes | maxwell); throws
// std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace stec
