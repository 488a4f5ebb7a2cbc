#include <doctest.h>

#include "stec/report.hpp"
#include "stec/suites.hpp"

using namespace stec;

TEST_SUITE_BEGIN("report");

TEST_CASE("json serialization is byte-deterministic for a fixed seed") {
  SuiteConfig cfg;
  cfg.seed = 7;
  cfg.max_dim = 3;
  cfg.cases = 40;
  std::string a = to_json(run_algebra_suite(cfg));
  std::string b = to_json(run_algebra_suite(cfg));
  CHECK(a == b);

  cfg.seed = 8;
  std::string c = to_json(run_algebra_suite(cfg));
  CHECK(a != c);  // the seed is part of the report
}

TEST_CASE("cases are sorted by id and summarized") {
  Report r;
  r.suite = "demo";
  r.cases.push_back(make_case("b", "", "0", "0", 0.0, 0.0));
  r.cases.push_back(make_case("a", "", "0", "1", 1.0, 0.0));
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK(!r.all_pass());
  std::string json = to_json(r);
  CHECK(json.find("\"a\"") < json.find("\"b\""));
  CHECK(json.find("\"summary\": {\"total\": 2, \"passed\": 1, \"failed\": 1}") !=
        std::string::npos);
  // 17-significant-digit floats
  Report f;
  f.suite = "fmt";
  f.cases.push_back(make_case("x", "", "", "", 0.1, 1e-9));
  CHECK(to_json(f).find("0.10000000000000001") != std::string::npos);

  std::string table = to_table(r);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find("summary: 1/2 passed") != std::string::npos);
}

TEST_CASE("suite dispatch rejects unknown names") {
  SuiteConfig cfg;
  CHECK_THROWS_AS(run_suite("spectral", cfg), std::invalid_argument);
}

TEST_SUITE_END();
