#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stec/geometry.hpp"

namespace stec {

inline constexpr const char* tool_version = "stec 1.0.0";

// One verification case. pass iff residual <= tolerance (exact checks use
// tolerance 0 and count violations in `residual`).
struct CaseResult {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string got;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::string version = tool_version;
  Signature sig{1, 3};
  Quadrature quadrature{};
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  void sort_cases();  // ascending by id; serialization order
};

CaseResult make_case(std::string id, std::string inputs, std::string expected, std::string got,
                     double residual, double tolerance);

// Deterministic serializations: fixed key order, doubles rendered with 17
// significant digits, cases sorted by id.
std::string to_json(const Report& r);
std::string to_table(const Report& r);

}  // namespace stec
