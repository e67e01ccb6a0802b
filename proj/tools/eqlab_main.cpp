// Command-line front end. Talks to the library only through the C API.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eqlab/eqlab.h"

namespace {

// Exit codes: 0 pass, 1 counterexample, 2 usage or parse error, 3 cap
// exceeded, 4 internal error.
int exit_code(eqlab_status s) {
  switch (s) {
    case EQLAB_OK: return 0;
    case EQLAB_COUNTEREXAMPLE: return 1;
    case EQLAB_CAP_EXCEEDED: return 3;
    case EQLAB_INTERNAL: return 4;
    default: return 2;
  }
}

int report_error(eqlab_status s) {
  std::cerr << "eqlab: " << eqlab_last_error() << '\n';
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checker for equivalence spans, groupoids and numeric 2-groupoids"};
  std::string path;
  std::string suite = "all";
  std::string format = "text";
  std::optional<std::string> dot;
  std::optional<std::size_t> budget, zigzag_bound, cap;
  std::optional<unsigned long long> seed;
  app.add_option("instance", path, "Instance file (JSON)")->required();
  app.add_option("--suite", suite, "axioms, equ-equivalence, eff-quotient, interval, encoding or all")
      ->capture_default_str();
  app.add_option("--budget", budget, "Evaluator budget")->check(CLI::PositiveNumber);
  app.add_option("--zigzag-bound", zigzag_bound, "Length bound L for zigzags");
  app.add_option("--cap", cap, "Enumeration cap");
  app.add_option("--seed", seed, "Seed for the random fixtures");
  app.add_option("--emit-dot", dot, "Print the named span, groupoid or base as DOT and exit");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  eqlab_instance* inst = nullptr;
  if (auto s = eqlab_instance_load_file(path.c_str(), &inst); s != EQLAB_OK) return report_error(s);
  std::unique_ptr<eqlab_instance, decltype(&eqlab_instance_free)> guard(inst, eqlab_instance_free);

  auto set = [&](const char* key, auto value) {
    if (!value) return EQLAB_OK;
    return eqlab_config_set(inst, key, std::to_string(*value).c_str());
  };
  for (auto s : {set("budget", budget), set("zigzag_bound", zigzag_bound), set("cap", cap), set("seed", seed)}) {
    if (s != EQLAB_OK) return report_error(s);
  }

  if (dot) {
    char* text = nullptr;
    if (auto s = eqlab_emit_dot(inst, dot->c_str(), &text); s != EQLAB_OK) return report_error(s);
    std::fputs(text, stdout);
    eqlab_string_free(text);
    return 0;
  }

  const auto start = std::chrono::steady_clock::now();
  eqlab_report* report = nullptr;
  eqlab_status status = eqlab_run_suite(inst, suite.c_str(), &report);
  if (status != EQLAB_OK && status != EQLAB_COUNTEREXAMPLE) return report_error(status);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  char* text = nullptr;
  auto s = eqlab_report_render(report, format == "json" ? EQLAB_FORMAT_JSON : EQLAB_FORMAT_TEXT, &text);
  if (s != EQLAB_OK) {
    eqlab_report_free(report);
    return report_error(s);
  }
  std::fputs(text, stdout);
  eqlab_string_free(text);
  eqlab_report_free(report);
  // Timing goes to stderr so reports stay byte-identical across runs.
  std::fprintf(stderr, "eqlab: suite %s finished in %.2f s\n", suite.c_str(), seconds);
  return exit_code(status);
}
