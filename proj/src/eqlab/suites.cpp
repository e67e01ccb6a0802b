#include "eqlab/suites.hpp"

#include "eqlab/error.hpp"
#include "eqlab/fixtures.hpp"
#include "eqlab/parallel.hpp"

namespace eqlab {

namespace {

Report axioms(const Instance& inst) {
  Report r;
  r.suite = "axioms";
  CheckResult spaces{"spaces are topologies"};
  for (const auto& [name, s] : inst.spaces) {
    auto opens = s.opens(inst.config.cap);
    if (!s.is_open({}) || !s.is_open(opens.back())) spaces.fail(name);
    spaces.note(name + ": points " + std::to_string(s.size()) + ", opens " + std::to_string(opens.size()) +
                (is_T0(s) ? ", T0" : ""));
  }
  CheckResult equs{"equilogical spaces are T0 with an equivalence relation"};
  for (const auto& [name, e] : inst.equilogical) {
    try {
      Equilogical::make(e.space, e.rel);
    } catch (const Error& err) {
      equs.fail(name + ": " + err.what());
    }
  }
  CheckResult spans{"spans are equivalence spans"};
  for (const auto& s : inst.top_spans) {
    for (const auto& why : check_equivalence_span(s.span)) spans.fail(s.name + ": " + why);
    spans.note(s.name + ": Top0, " + (is_subspatial(s.span) ? "subspatial" : "not subspatial"));
  }
  for (const auto& s : inst.pasm_spans) {
    for (const auto& why : check_equivalence_span(s.span)) spans.fail(s.name + ": " + why);
  }
  CheckResult morphisms{"morphisms are tracked"};
  for (const auto& m : inst.morphisms) {
    const PartitionedAssembly* a = nullptr;
    const PartitionedAssembly* b = nullptr;
    for (const auto& [n, x] : inst.assemblies) {
      if (n == m.src) a = &x;
      if (n == m.tgt) b = &x;
    }
    if (!a || !b || !is_morphism(*a, *b, m.morphism)) morphisms.fail(m.name);
  }
  CheckResult groupoids{"groupoids satisfy the groupoid laws"};
  for (const auto& g : inst.groupoids) {
    for (const auto& why : check_groupoid(g.groupoid)) groupoids.fail(g.name + ": " + why);
  }
  for (const auto& s : inst.top_spans) {
    if (!is_subspatial(s.span)) continue;
    for (const auto& why : check_groupoid(groupoid_from_jointly_monic(s.span))) groupoids.fail(s.name + ": " + why);
  }
  CheckResult bases{"free dagger 2-groupoids satisfy the truncated laws"};
  auto base_results = parallel_map(inst.bases.size(), [&](std::size_t i) {
    NumericTwoGroupoid g{inst.bases[i].base, inst.config.zigzag_bound};
    auto table = make_cell_table(g, inst.config.cap);
    auto bad = check_two_groupoid(g, table);
    auto u = U_underlying(g, table);
    for (const auto& why : check_truncated_span(u)) bad.push_back("U: " + why);
    return std::make_pair(table.cells.size(), bad);
  });
  for (std::size_t i = 0; i < inst.bases.size(); ++i) {
    for (const auto& why : base_results[i].second) bases.fail(inst.bases[i].name + ": " + why);
    bases.note(inst.bases[i].name + ": " + std::to_string(base_results[i].first) + " cells up to length " +
               std::to_string(inst.config.zigzag_bound));
  }
  r.checks = {spaces, equs, spans, morphisms, groupoids, bases};
  return r;
}

Report equ_equivalence(const Instance& inst) {
  std::vector<NamedTopSpan> subspatial;
  std::vector<std::string> skipped;
  for (const auto& s : inst.top_spans) {
    if (is_subspatial(s.span)) {
      subspatial.push_back(s);
    } else {
      skipped.push_back(s.name);
    }
  }
  auto parts = parallel_map(2, [&](std::size_t i) {
    if (i == 0) return equ_equivalence_check(subspatial, inst.config.cap);
    return homotopy_quotient_equals_Equ(groupoid_pack(subspatial), inst.config.cap);
  });
  Report r = parts[0];
  r.append(parts[1]);
  r.suite = "equ-equivalence";
  for (const auto& name : skipped) r.checks.front().note(name + ": not subspatial, skipped");
  return r;
}

Report eff_quotient(const Instance& inst) {
  const std::size_t L = inst.config.zigzag_bound, cap = inst.config.cap;
  Report r = monic_form_check(inst.pasm_spans, cap);
  r.suite = "eff-quotient";
  auto es = parallel_map(inst.pasm_spans.size(), [&](std::size_t i) {
    return essential_surjectivity_check(inst.pasm_spans[i].name, inst.pasm_spans[i].span, L, cap);
  });
  // One check per condition, collecting every span.
  std::vector<CheckResult> merged;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string prefix = inst.pasm_spans[i].name + ": ";
    for (std::size_t k = 0; k < es[i].checks.size(); ++k) {
      const auto& c = es[i].checks[k];
      std::string name = c.name.rfind(prefix, 0) == 0 ? c.name.substr(prefix.size()) : c.name;
      if (merged.size() <= k) merged.emplace_back("essential surjectivity: " + name);
      auto& m = merged[k];
      m.passed = m.passed && c.passed;
      for (const auto& n : c.notes) m.notes.push_back(prefix + n);
      for (const auto& ce : c.counterexamples) m.counterexamples.push_back(prefix + ce);
      if (!c.passed && c.counterexamples.empty()) m.counterexamples.push_back(prefix + "failed");
    }
  }
  r.checks.insert(r.checks.end(), merged.begin(), merged.end());
  std::vector<NumericFixture> fixtures;
  for (const auto& b : inst.bases) fixtures.push_back({b.name, {b.base, L}});
  r.append(homotopy_quotient_check_N(fixtures, cap));
  return r;
}

Report interval(const Instance& inst) {
  auto parts = parallel_map(2, [&](std::size_t i) {
    if (i == 0) {
      return verify_interval_structure<GroupoidModel>(groupoid_interval_data(), groupoid_interval_samples(),
                                                      groupoid_interval_tests(), inst.config.cap);
    }
    return verify_interval_structure<NumericModel>(numeric_interval_data(), numeric_interval_samples(),
                                                   numeric_interval_tests(), inst.config.cap);
  });
  Report r;
  r.suite = "interval";
  for (std::size_t i = 0; i < 2; ++i) {
    for (auto c : parts[i].checks) {
      c.name = (i == 0 ? "groupoid: " : "2-groupoid: ") + c.name;
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

}  // namespace

Report encoding_check(const std::vector<NamedBase>& bases, std::size_t L, std::uint64_t seed, std::size_t budget,
                      std::size_t samples, std::size_t cap) {
  Report r;
  r.suite = "encoding";
  CheckResult pairing{"cantor pair and unpair are inverse on [0, 10000]"};
  for (unsigned k = 0; k <= 10000; ++k) {
    auto [n, m] = cantor_unpair(k);
    if (cantor_pair(n, m) != k) pairing.fail("pair(unpair(" + std::to_string(k) + ")) differs");
    for (auto [a, b] : {std::pair<unsigned, unsigned>{k, 10000 - k}, {k, k}, {k, 0}}) {
      if (cantor_unpair(cantor_pair(a, b)) != std::make_pair(Nat(a), Nat(b))) {
        pairing.fail("unpair(pair(" + std::to_string(a) + ", " + std::to_string(b) + ")) differs");
      }
    }
  }
  CheckResult alpha{"alpha-wedge with endpoints is injective up to length " + std::to_string(L)};
  for (const auto& b : bases) {
    auto t = make_cell_table({b.base, L}, cap);
    if (!alpha_wedge_injective(b.base, t)) alpha.fail(b.name);
    alpha.note(b.name + ": " + std::to_string(t.cells.size()) + " zigzags");
  }
  const std::size_t low = std::max<std::size_t>(1, budget / 4);
  CheckResult mono{"evaluation is monotone in the budget (" + std::to_string(low) + " vs " + std::to_string(budget) +
                   ")"};
  std::mt19937_64 rng(seed);
  std::size_t values_low = 0, values_high = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Program p = random_program(rng);
    Nat n = rng() % 20;
    auto a = eval(p, n, low);
    auto b = eval(p, n, budget);
    values_low += a.is_value();
    values_high += b.is_value();
    if (a.is_value() && (!b.is_value() || b.value != a.value)) {
      mono.fail(p.to_string() + " on " + nat_to_string(n));
    }
  }
  mono.note(std::to_string(samples) + " samples; values at the low budget " + std::to_string(values_low) +
            ", at the high budget " + std::to_string(values_high));
  r.checks = {pairing, alpha, mono};
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "equ-equivalence", "eff-quotient", "interval", "encoding",
                                              "all"};
  return names;
}

Report run_suite(const Instance& inst, const std::string& suite) {
  const auto& c = inst.config;
  if (suite == "axioms") return axioms(inst);
  if (suite == "equ-equivalence") return equ_equivalence(inst);
  if (suite == "eff-quotient") return eff_quotient(inst);
  if (suite == "interval") return interval(inst);
  if (suite == "encoding") return encoding_check(inst.bases, c.zigzag_bound, c.seed, c.budget, 1000, c.cap);
  if (suite == "all") {
    Report all;
    all.suite = "all";
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      for (auto check : run_suite(inst, name).checks) {
        check.name = name + ": " + check.name;
        all.checks.push_back(std::move(check));
      }
    }
    return all;
  }
  throw UnknownObject("unknown suite '" + suite + "'");
}

}  // namespace eqlab
