#include "eqlab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace eqlab {

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::size_t Report::counterexample_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : std::max<std::size_t>(1, c.counterexamples.size());
  return n;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "suite " << report.suite << '\n';
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    for (const auto& n : c.notes) out << "  " << n << '\n';
    for (const auto& ce : c.counterexamples) out << "  counterexample: " << ce << '\n';
  }
  out << (report.passed() ? "result: pass" : "result: fail") << " (" << report.checks.size()
      << " checks, " << report.counterexample_count() << " counterexamples)\n";
  return out.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["notes"] = c.notes;
    cj["counterexamples"] = c.counterexamples;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

}  // namespace eqlab
