// One line per acceptance criterion: PASS or FAIL, elapsed time against the
// time limit, and a short summary. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "eqlab/error.hpp"
#include "eqlab/fixtures.hpp"
#include "eqlab/suites.hpp"

using namespace eqlab;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

Outcome from_report(const Report& r, std::string summary) {
  if (!r.passed()) {
    for (const auto& c : r.checks) {
      if (!c.passed) {
        summary += "; failed: " + c.name;
        if (!c.counterexamples.empty()) summary += " (" + c.counterexamples.front() + ")";
        break;
      }
    }
  }
  return {r.passed(), summary};
}

Outcome equ_equivalence() {
  auto pack = top_span_pack();
  bool small = true;
  for (const auto& s : pack) small = small && s.span.graph.a0.size() <= 4;
  auto r = equ_equivalence_check(pack);
  auto out = from_report(r, std::to_string(pack.size()) + " subspatial spans, " + std::to_string(pack.size() * pack.size()) +
                                " ordered pairs");
  out.passed = out.passed && small && pack.size() >= 20;
  return out;
}

Outcome groupoids() {
  auto pack = top_span_pack();
  std::vector<TopGroupoid> gs;
  std::size_t upgraded = 0;
  std::string failure;
  for (const auto& s : pack) {
    try {
      gs.push_back(groupoid_from_jointly_monic(s.span));
      if (!is_groupoid(gs.back())) failure = s.name + " is not a groupoid";
    } catch (const Error& e) {
      failure = s.name + ": " + e.what();
      gs.push_back({});
    }
  }
  for (std::size_t x = 0; x < gs.size() && failure.empty(); ++x) {
    for (std::size_t y = 0; y < gs.size() && failure.empty(); ++y) {
      for (const auto& h : enumerate_graph_homs<FinTop>(gs[x].graph, gs[y].graph)) {
        try {
          auto f = graph_hom_is_functor(gs[x], gs[y], h);
          if (!is_functor(gs[x], gs[y], f)) failure = pack[x].name + " -> " + pack[y].name + ": not a functor";
          ++upgraded;
        } catch (const Error& e) {
          failure = pack[x].name + " -> " + pack[y].name + ": " + e.what();
        }
      }
    }
  }
  return {failure.empty(), std::to_string(gs.size()) + " groupoids, " + std::to_string(upgraded) +
                               " homomorphisms upgraded" + (failure.empty() ? "" : "; " + failure)};
}

Outcome homotopy_quotient() {
  auto pack = groupoid_pack(top_span_pack());
  auto r = homotopy_quotient_equals_Equ(pack);
  std::string compared;
  for (const auto& c : r.checks) {
    if (c.name.rfind("homotopy = ", 0) == 0 && !c.notes.empty()) compared = c.notes.front();
  }
  return from_report(r, "three-way agreement, equivalence relation and composition; " + compared);
}

Outcome interval() {
  auto g = verify_interval_structure<GroupoidModel>(groupoid_interval_data(), groupoid_interval_samples(),
                                                    groupoid_interval_tests());
  auto n = verify_interval_structure<NumericModel>(numeric_interval_data(), numeric_interval_samples(),
                                                   numeric_interval_tests());
  const std::size_t gs = groupoid_interval_samples().size(), ns = numeric_interval_samples().size();
  Report both = g;
  both.append(n);
  auto out = from_report(both, "groupoid model " + std::to_string(g.checks.size()) + " checks over " +
                                   std::to_string(gs) + " samples, 2-groupoid model " +
                                   std::to_string(n.checks.size()) + " checks over " + std::to_string(ns) + " samples");
  out.passed = out.passed && gs >= 5 && ns >= 5;
  return out;
}

Outcome monic_form_spans() {
  auto pack = pasm_span_pack();
  bool small = true;
  for (const auto& s : pack) small = small && s.span.graph.a0.size() <= 5 && s.span.graph.a1.size() <= 5;
  auto out = from_report(monic_form_check(pack), std::to_string(pack.size()) + " PAsm spans, carriers of at most 5");
  out.passed = out.passed && small && pack.size() >= 20;
  return out;
}

Outcome essential_surjectivity() {
  auto pack = pasm_span_pack();
  Report all;
  std::size_t non_injective = 0;
  for (const auto& s : pack) {
    auto r = essential_surjectivity_check(s.name, s.span, 3);
    for (const auto& c : r.checks) {
      for (const auto& note : c.notes) non_injective += note.find("injective: no") != std::string::npos;
    }
    all.append(r);
  }
  return from_report(all, std::to_string(pack.size()) + " PAsm spans at L = 3 (" + std::to_string(non_injective) +
                              " with a non-injective alpha-wedge)");
}

Outcome numeric_quotient() {
  auto pack = numeric_pack(3);
  bool small = true;
  for (const auto& f : pack) small = small && f.groupoid.base.node_count() <= 3;
  auto r = homotopy_quotient_check_N(pack);
  std::string pairs;
  for (const auto& c : r.checks) {
    if (c.name == "U-identified iff homotopic" && !c.notes.empty()) pairs = c.notes.back();
  }
  auto out = from_report(r, std::to_string(pack.size()) + " numeric 2-groupoids at L = 3; " + pairs);
  out.passed = out.passed && small;
  return out;
}

Outcome encoding() {
  std::vector<NamedBase> bases;
  for (const auto& f : numeric_pack(3)) bases.push_back({f.name, f.groupoid.base});
  auto r = encoding_check(bases, 3, kDefaultSeed, 1000, 1000);
  return from_report(r, "pairing on [0, 10000], alpha-wedge on " + std::to_string(bases.size()) +
                            " fixture bases, 1000 evaluator samples");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"Equ equivalent to subspatial spans", 60, equ_equivalence},
      {"subspatial spans are groupoids in Top0", 10, groupoids},
      {"homotopical quotient of subspatial spans", 120, homotopy_quotient},
      {"interval co-span contract in both models", 30, interval},
      {"monic form of PAsm spans", 30, monic_form_spans},
      {"free dagger 2-groupoids are essentially surjective", 120, essential_surjectivity},
      {"homotopical quotient of numeric 2-groupoids", 300, numeric_quotient},
      {"encoding integrity", 30, encoding},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool ok = out.passed && in_time;
    failed += !ok;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s%s) %s\n", index, ok ? "PASS" : "FAIL", c.name, secs, c.limit,
                in_time ? "" : ", over the limit", out.summary.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
