#include "eqlab/eqlab.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "eqlab/error.hpp"
#include "eqlab/instance.hpp"
#include "eqlab/report.hpp"
#include "eqlab/suites.hpp"
#include "eqlab/tracklang.hpp"

struct eqlab_instance {
  std::string text;
  eqlab::ConfigOverrides overrides;
  eqlab::Instance inst;
};

struct eqlab_report {
  eqlab::Report report;
};

namespace {

thread_local std::string last_error;

eqlab_status fail(eqlab_status s, const std::string& why) {
  last_error = why;
  return s;
}

// Runs `body`, translating exceptions to status codes.
template <class F>
eqlab_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const eqlab::CapExceeded& e) {
    return fail(EQLAB_CAP_EXCEEDED, std::string(e.what()) + " (cap: " + e.cap_name() + ")");
  } catch (const eqlab::Error& e) {
    switch (e.kind()) {
      case eqlab::ErrorKind::Parse: return fail(EQLAB_PARSE_ERROR, e.what());
      case eqlab::ErrorKind::UnknownObject: return fail(EQLAB_UNKNOWN_OBJECT, e.what());
      case eqlab::ErrorKind::InvalidArgument:
      case eqlab::ErrorKind::Precondition: return fail(EQLAB_INVALID_ARGUMENT, e.what());
      default: return fail(EQLAB_INTERNAL, e.what());
    }
  } catch (const std::bad_alloc&) {
    return fail(EQLAB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EQLAB_INTERNAL, e.what());
  }
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs) {
    if (!p) return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* eqlab_version(void) { return "0.1.0"; }

const char* eqlab_last_error(void) { return last_error.c_str(); }

eqlab_status eqlab_instance_load_string(const char* text, eqlab_instance** out) {
  return guarded([&] {
    if (null_args({text, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto* h = new eqlab_instance{text, {}, eqlab::load_instance_string(text)};
    *out = h;
    return EQLAB_OK;
  });
}

eqlab_status eqlab_instance_load_file(const char* path, eqlab_instance** out) {
  return guarded([&] {
    if (null_args({path, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    // Keep the text so config changes can rebuild the instance.
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(EQLAB_PARSE_ERROR, std::string(path) + ": cannot open");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      auto inst = eqlab::load_instance_string(text.str());
      *out = new eqlab_instance{text.str(), {}, std::move(inst)};
    } catch (const eqlab::ParseError& e) {
      return fail(EQLAB_PARSE_ERROR, std::string(path) + ": " + e.what());
    }
    return EQLAB_OK;
  });
}

void eqlab_instance_free(eqlab_instance* inst) { delete inst; }

eqlab_status eqlab_config_set(eqlab_instance* inst, const char* key, const char* value) {
  return guarded([&] {
    if (null_args({inst, key, value})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    eqlab::Config probe;
    eqlab::set_config(probe, key, value);  // validate before touching the instance
    auto overrides = inst->overrides;
    overrides.emplace_back(key, value);
    inst->inst = eqlab::load_instance_string(inst->text, overrides);
    inst->overrides = std::move(overrides);
    return EQLAB_OK;
  });
}

eqlab_status eqlab_run_suite(const eqlab_instance* inst, const char* suite, eqlab_report** out) {
  return guarded([&] {
    if (null_args({inst, suite, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto* r = new eqlab_report{eqlab::run_suite(inst->inst, suite)};
    *out = r;
    return r->report.passed() ? EQLAB_OK : EQLAB_COUNTEREXAMPLE;
  });
}

int eqlab_report_passed(const eqlab_report* report) { return report && report->report.passed() ? 1 : 0; }

size_t eqlab_report_check_count(const eqlab_report* report) { return report ? report->report.checks.size() : 0; }

size_t eqlab_report_counterexample_count(const eqlab_report* report) {
  return report ? report->report.counterexample_count() : 0;
}

eqlab_status eqlab_report_render(const eqlab_report* report, eqlab_format format, char** out) {
  return guarded([&] {
    if (null_args({report, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    if (format != EQLAB_FORMAT_TEXT && format != EQLAB_FORMAT_JSON) {
      return fail(EQLAB_INVALID_ARGUMENT, "unknown format");
    }
    *out = copy(format == EQLAB_FORMAT_JSON ? eqlab::render_json(report->report) : eqlab::render_text(report->report));
    return EQLAB_OK;
  });
}

void eqlab_report_free(eqlab_report* report) { delete report; }

eqlab_status eqlab_emit_dot(const eqlab_instance* inst, const char* name, char** out) {
  return guarded([&] {
    if (null_args({inst, name, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    *out = copy(eqlab::emit_dot(inst->inst, name));
    return EQLAB_OK;
  });
}

void eqlab_string_free(char* s) { std::free(s); }

eqlab_status eqlab_cantor_pair(const char* n, const char* m, char** out) {
  return guarded([&] {
    if (null_args({n, m, out})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    *out = copy(eqlab::nat_to_string(eqlab::cantor_pair(eqlab::nat_from_string(n), eqlab::nat_from_string(m))));
    return EQLAB_OK;
  });
}

eqlab_status eqlab_cantor_unpair(const char* k, char** n, char** m) {
  return guarded([&] {
    if (null_args({k, n, m})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    auto [a, b] = eqlab::cantor_unpair(eqlab::nat_from_string(k));
    char* first = copy(eqlab::nat_to_string(a));
    try {
      *m = copy(eqlab::nat_to_string(b));
    } catch (...) {
      std::free(first);
      throw;
    }
    *n = first;
    return EQLAB_OK;
  });
}

eqlab_status eqlab_program_eval(const char* program, const char* input, size_t budget, int* exhausted,
                                char** value) {
  return guarded([&] {
    if (null_args({program, input, exhausted, value})) return fail(EQLAB_INVALID_ARGUMENT, "null argument");
    auto r = eqlab::eval(eqlab::Program::parse(program), eqlab::nat_from_string(input), budget);
    *exhausted = r.is_value() ? 0 : 1;
    *value = r.is_value() ? copy(eqlab::nat_to_string(r.value)) : nullptr;
    return EQLAB_OK;
  });
}

}  // extern "C"
