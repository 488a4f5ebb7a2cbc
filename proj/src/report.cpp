#include "stec/report.hpp"

#include <algorithm>
#include <cstdio>

namespace stec {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

int Report::passed() const {
  int n = 0;
  for (const CaseResult& c : cases) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

void Report::sort_cases() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
}

CaseResult make_case(std::string id, std::string inputs, std::string expected, std::string got,
                     double residual, double tolerance) {
  CaseResult c;
  c.id = std::move(id);
  c.inputs = std::move(inputs);
  c.expected = std::move(expected);
  c.got = std::move(got);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  return c;
}

std::string to_json(const Report& r) {
  Report sorted = r;
  sorted.sort_cases();
  std::string out;
  out += "{\n";
  out += "  \"suite\": \"" + json_escape(sorted.suite) + "\",\n";
  out += "  \"version\": \"" + json_escape(sorted.version) + "\",\n";
  out += "  \"signature\": [" + std::to_string(sorted.sig.time_dims) + ", " +
         std::to_string(sorted.sig.space_dims) + "],\n";
  out += "  \"quadrature\": {\"gauss_order\": " + std::to_string(sorted.quadrature.gauss_order) +
         ", \"subdivisions\": " + std::to_string(sorted.quadrature.subdivisions) + "},\n";
  out += "  \"seed\": " + std::to_string(sorted.seed) + ",\n";
  out += "  \"cases\": [\n";
  for (std::size_t i = 0; i < sorted.cases.size(); ++i) {
    const CaseResult& c = sorted.cases[i];
    out += "    {\"id\": \"" + json_escape(c.id) + "\", \"inputs\": \"" + json_escape(c.inputs) +
           "\", \"expected\": \"" + json_escape(c.expected) + "\", \"got\": \"" +
           json_escape(c.got) + "\", \"residual\": " + fmt_double(c.residual) +
           ", \"tolerance\": " + fmt_double(c.tolerance) +
           ", \"pass\": " + (c.pass ? "true" : "false") + "}";
    out += (i + 1 < sorted.cases.size()) ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"summary\": {\"total\": " + std::to_string(sorted.cases.size()) +
         ", \"passed\": " + std::to_string(sorted.passed()) +
         ", \"failed\": " + std::to_string(sorted.failed()) + "}\n";
  out += "}\n";
  return out;
}

std::string to_table(const Report& r) {
  Report sorted = r;
  sorted.sort_cases();
  std::size_t id_w = 4;
  for (const CaseResult& c : sorted.cases) id_w = std::max(id_w, c.id.size());
  std::string out;
  out += "suite: " + sorted.suite + "  (" + sorted.version + ")\n";
  out += "signature: (" + std::to_string(sorted.sig.time_dims) + "," +
         std::to_string(sorted.sig.space_dims) +
         ")  gauss: " + std::to_string(sorted.quadrature.gauss_order) +
         "  subdivisions: " + std::to_string(sorted.quadrature.subdivisions) +
         "  seed: " + std::to_string(sorted.seed) + "\n";
  for (const CaseResult& c : sorted.cases) {
    std::string line = c.pass ? "pass  " : "FAIL  ";
    line += c.id;
    line.append(id_w + 2 > c.id.size() ? id_w + 2 - c.id.size() : 1, ' ');
    line += "residual " + fmt_double(c.residual) + " (tol " + fmt_double(c.tolerance) + ")";
    if (!c.pass && !c.got.empty()) line += "  got " + c.got + " expected " + c.expected;
    out += line + "\n";
  }
  out += "summary: " + std::to_string(sorted.passed()) + "/" + std::to_string(sorted.cases.size()) +
         " passed\n";
  return out;
}

}  // namespace stec
