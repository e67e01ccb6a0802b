#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "eqlab/eqlab.h"

namespace {

const char* kSmall = R"({
  "config": {"zigzag_bound": 2},
  "assemblies": {"A": {"carrier": 2, "xi": [0, 1]}},
  "spans": {
    "diag": {"ambient": "pasm", "nodes": "A", "relation": [[0, 0], [1, 1]]},
    "total": {"ambient": "pasm", "nodes": "A", "relation": [[0, 0], [0, 1], [1, 0], [1, 1]]}
  },
  "twogroupoid_bases": {"I": {"builtin": "interval"}}
})";

std::string take(char* s) {
  std::string out = s ? s : "";
  eqlab_string_free(s);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("load, run, render") {
  eqlab_instance* inst = nullptr;
  REQUIRE(eqlab_instance_load_string(kSmall, &inst) == EQLAB_OK);
  eqlab_report* report = nullptr;
  CHECK(eqlab_run_suite(inst, "axioms", &report) == EQLAB_OK);
  REQUIRE(report);
  CHECK(eqlab_report_passed(report) == 1);
  CHECK(eqlab_report_check_count(report) == 6);
  CHECK(eqlab_report_counterexample_count(report) == 0);
  char* text = nullptr;
  REQUIRE(eqlab_report_render(report, EQLAB_FORMAT_TEXT, &text) == EQLAB_OK);
  auto rendered = take(text);
  CHECK(rendered.rfind("suite axioms\n", 0) == 0);
  REQUIRE(eqlab_report_render(report, EQLAB_FORMAT_JSON, &text) == EQLAB_OK);
  CHECK(take(text).find("\"passed\": true") != std::string::npos);
  CHECK(eqlab_report_render(report, static_cast<eqlab_format>(7), &text) == EQLAB_INVALID_ARGUMENT);
  eqlab_report_free(report);

  // Identical input, identical bytes.
  eqlab_report* again = nullptr;
  REQUIRE(eqlab_run_suite(inst, "eff-quotient", &report) == EQLAB_OK);
  REQUIRE(eqlab_run_suite(inst, "eff-quotient", &again) == EQLAB_OK);
  char* a = nullptr;
  char* b = nullptr;
  eqlab_report_render(report, EQLAB_FORMAT_JSON, &a);
  eqlab_report_render(again, EQLAB_FORMAT_JSON, &b);
  CHECK(take(a) == take(b));
  eqlab_report_free(report);
  eqlab_report_free(again);
  eqlab_instance_free(inst);
}

TEST_CASE("errors map to status codes") {
  eqlab_instance* inst = nullptr;
  CHECK(eqlab_instance_load_string("{", &inst) == EQLAB_PARSE_ERROR);
  CHECK(inst == nullptr);
  CHECK(std::string(eqlab_last_error()).find("instance file") != std::string::npos);
  CHECK(eqlab_instance_load_string(R"({"spaces": {"bad": {"points": 2, "opens": [[0]]}}})", &inst) ==
        EQLAB_PARSE_ERROR);
  CHECK(std::string(eqlab_last_error()).find("'bad'") != std::string::npos);
  CHECK(eqlab_instance_load_string(R"({"spans": {"s": {"ambient": "pasm", "nodes": "missing"}}})", &inst) ==
        EQLAB_PARSE_ERROR);
  CHECK(std::string(eqlab_last_error()).find("unresolved reference 'missing'") != std::string::npos);
  CHECK(eqlab_instance_load_file("/nonexistent/instance.json", &inst) == EQLAB_PARSE_ERROR);
  CHECK(eqlab_instance_load_string(nullptr, &inst) == EQLAB_INVALID_ARGUMENT);

  REQUIRE(eqlab_instance_load_string(kSmall, &inst) == EQLAB_OK);
  CHECK(std::string(eqlab_last_error()).empty());
  eqlab_report* report = nullptr;
  CHECK(eqlab_run_suite(inst, "no-such-suite", &report) == EQLAB_UNKNOWN_OBJECT);
  CHECK(report == nullptr);
  char* dot = nullptr;
  CHECK(eqlab_emit_dot(inst, "nothing", &dot) == EQLAB_UNKNOWN_OBJECT);
  CHECK(eqlab_config_set(inst, "colour", "3") == EQLAB_INVALID_ARGUMENT);
  CHECK(eqlab_config_set(inst, "budget", "0") == EQLAB_INVALID_ARGUMENT);
  CHECK(eqlab_config_set(inst, "cap", "-1") == EQLAB_INVALID_ARGUMENT);
  REQUIRE(eqlab_config_set(inst, "cap", "3") == EQLAB_OK);
  CHECK(eqlab_run_suite(inst, "axioms", &report) == EQLAB_CAP_EXCEEDED);
  CHECK(std::string(eqlab_last_error()).find("cap") != std::string::npos);
  eqlab_instance_free(inst);
}

TEST_CASE("counterexamples are reported, not raised") {
  // Two routes with the same α^ and endpoints through nodes sharing a realizer.
  const char* text = R"({
    "assemblies": {"A": {"carrier": 4, "xi": [0, 5, 5, 1]}},
    "twogroupoid_bases": {"B": {"nodes": "A", "edges": [
      {"src": 0, "tgt": 1, "code": 2}, {"src": 1, "tgt": 3, "code": 3},
      {"src": 0, "tgt": 2, "code": 2}, {"src": 2, "tgt": 3, "code": 3}]}}
  })";
  eqlab_instance* inst = nullptr;
  REQUIRE(eqlab_instance_load_string(text, &inst) == EQLAB_OK);
  eqlab_report* report = nullptr;
  CHECK(eqlab_run_suite(inst, "encoding", &report) == EQLAB_COUNTEREXAMPLE);
  REQUIRE(report);
  CHECK(eqlab_report_passed(report) == 0);
  CHECK(eqlab_report_counterexample_count(report) == 1);
  eqlab_report_free(report);
  eqlab_instance_free(inst);
}

TEST_CASE("dot output") {
  eqlab_instance* inst = nullptr;
  REQUIRE(eqlab_instance_load_string(kSmall, &inst) == EQLAB_OK);
  char* dot = nullptr;
  REQUIRE(eqlab_emit_dot(inst, "diag", &dot) == EQLAB_OK);
  auto diag = take(dot);
  CHECK(count(diag, "[label=") == 4);  // 2 nodes, 2 loops
  CHECK(count(diag, "n0 -> n0") == 1);
  CHECK(count(diag, "n1 -> n1") == 1);
  REQUIRE(eqlab_emit_dot(inst, "total", &dot) == EQLAB_OK);
  auto total = take(dot);
  CHECK(count(total, " -> ") == 4);
  CHECK(count(total, "\"];\n") == 6);
  REQUIRE(eqlab_emit_dot(inst, "I", &dot) == EQLAB_OK);
  auto interval = take(dot);
  CHECK(count(interval, " -> n") == 1);
  CHECK(interval.find("n0 -> n1 [label=\"u\"]") != std::string::npos);
  CHECK(interval.find("// 0 -u,0-> 1 -u,1-> 0") != std::string::npos);
  char* again = nullptr;
  REQUIRE(eqlab_emit_dot(inst, "I", &again) == EQLAB_OK);
  CHECK(take(again) == interval);
  eqlab_instance_free(inst);
}

TEST_CASE("config changes rebuild packs") {
  eqlab_instance* inst = nullptr;
  REQUIRE(eqlab_instance_load_string(R"({"packs": ["numeric"], "config": {"zigzag_bound": 1}})", &inst) == EQLAB_OK);
  char* dot = nullptr;
  REQUIRE(eqlab_emit_dot(inst, "numeric/interval", &dot) == EQLAB_OK);
  CHECK(count(take(dot), "//") == 2);
  REQUIRE(eqlab_config_set(inst, "zigzag_bound", "2") == EQLAB_OK);
  REQUIRE(eqlab_emit_dot(inst, "numeric/interval", &dot) == EQLAB_OK);
  CHECK(count(take(dot), "//") == 4);
  eqlab_instance_free(inst);
}

TEST_CASE("encoding helpers") {
  char* out = nullptr;
  REQUIRE(eqlab_cantor_pair("1", "2", &out) == EQLAB_OK);
  CHECK(take(out) == "8");
  REQUIRE(eqlab_cantor_pair("123456789012345678901234567890", "0", &out) == EQLAB_OK);
  auto big = take(out);
  char* n = nullptr;
  char* m = nullptr;
  REQUIRE(eqlab_cantor_unpair(big.c_str(), &n, &m) == EQLAB_OK);
  CHECK(take(n) == "123456789012345678901234567890");
  CHECK(take(m) == "0");
  CHECK(eqlab_cantor_pair("-1", "2", &out) == EQLAB_PARSE_ERROR);

  int exhausted = -1;
  char* value = nullptr;
  REQUIRE(eqlab_program_eval("(pair in (succ in))", "3", 10, &exhausted, &value) == EQLAB_OK);
  CHECK(exhausted == 0);
  CHECK(take(value) == "32");  // (3+4)(3+4+1)/2 + 4
  REQUIRE(eqlab_program_eval("(loop (pred in) in)", "10", 5, &exhausted, &value) == EQLAB_OK);
  CHECK(exhausted == 1);
  CHECK(value == nullptr);
  REQUIRE(eqlab_program_eval("(loop (pred in) in)", "10", 100, &exhausted, &value) == EQLAB_OK);
  CHECK(exhausted == 0);
  CHECK(take(value) == "0");
  CHECK(eqlab_program_eval("(succ", "1", 10, &exhausted, &value) == EQLAB_PARSE_ERROR);
  CHECK(eqlab_program_eval("in", "1", 0, &exhausted, &value) == EQLAB_INVALID_ARGUMENT);
}
