#pragma once

#include <string>
#include <vector>

namespace eqlab {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::vector<std::string> notes;
  std::vector<std::string> counterexamples;

  void fail(std::string counterexample) {
    passed = false;
    counterexamples.push_back(std::move(counterexample));
  }
  void note(std::string line) { notes.push_back(std::move(line)); }
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t counterexample_count() const;
  void append(const Report& other);
};

// Both renderings are byte-stable for identical reports.
std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace eqlab
