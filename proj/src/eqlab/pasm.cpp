#include "eqlab/pasm.hpp"

#include <map>
#include <set>
#include <sstream>

#include "eqlab/error.hpp"

namespace eqlab {

bool Pasm::admits_last(const PartitionedAssembly& src, const PartitionedAssembly& tgt,
                       std::span<const Point> prefix) {
  const Point p = prefix.size() - 1;
  for (Point j = 0; j < p; ++j) {
    if (src.xi[j] == src.xi[p] && tgt.xi[prefix[j]] != tgt.xi[prefix[p]]) return false;
  }
  return true;
}

PartitionedAssembly Pasm::product_subset(const PartitionedAssembly& a, const PartitionedAssembly& b,
                                         const std::vector<std::pair<Point, Point>>& pairs) {
  PartitionedAssembly out;
  out.xi.reserve(pairs.size());
  for (auto [x, y] : pairs) out.xi.push_back(cantor_pair(a.xi.at(x), b.xi.at(y)));
  return out;
}

PartitionedAssembly Pasm::restrict(const PartitionedAssembly& a, const std::vector<Point>& subset) {
  PartitionedAssembly out;
  for (Point x : subset) out.xi.push_back(a.xi.at(x));
  return out;
}

bool is_morphism(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f,
                 const Program& tracker, std::size_t budget) {
  if (f.domain_size() != src.size() || f.codomain_size() != tgt.size()) return false;
  for (Point x = 0; x < src.size(); ++x) {
    auto r = eval(tracker, src.xi[x], budget);
    if (!r.is_value() || r.value != tgt.xi[f(x)]) return false;
  }
  return true;
}

bool is_morphism(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PAsmMorphism& m) {
  return is_morphism(src, tgt, m.fn, m.tracker, m.budget);
}

AutoTrack auto_track(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f) {
  if (f.domain_size() != src.size() || f.codomain_size() != tgt.size()) {
    throw InvalidArgument("auto_track: map does not fit the assemblies");
  }
  AutoTrack out;
  std::map<Nat, Point> first_with;
  std::vector<std::pair<Nat, Nat>> table;
  for (Point x = 0; x < src.size(); ++x) {
    auto [it, fresh] = first_with.emplace(src.xi[x], x);
    if (fresh) {
      table.emplace_back(src.xi[x], tgt.xi[f(x)]);
    } else if (tgt.xi[f(it->second)] != tgt.xi[f(x)]) {
      out.conflict = std::make_pair(it->second, x);
      return out;
    }
  }
  out.morphism = PAsmMorphism{f, synthesize_table_tracker(table), table_tracker_budget(table.size())};
  return out;
}

PAsmMorphism track_or_throw(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f) {
  auto t = auto_track(src, tgt, f);
  if (!t) {
    throw PreconditionViolation("map " + f.to_string() + " is not realizer-consistent at points " +
                                std::to_string(t.conflict->first) + " and " +
                                std::to_string(t.conflict->second));
  }
  return *t.morphism;
}

PasmProduct product_pasm(const PartitionedAssembly& a, const PartitionedAssembly& b, std::size_t cap) {
  if (a.size() != 0 && b.size() > cap / a.size()) throw CapExceeded("cap", "product assembly exceeds cap");
  auto cone = product<Pasm>(a, b);
  // Projections read the realizer components back, whatever the point.
  return PasmProduct{cone.apex, PAsmMorphism{cone.leg1, Program::fst(Program::input()), 2},
                     PAsmMorphism{cone.leg2, Program::snd(Program::input()), 2}};
}

PAsmMorphism pair_tracked(const PAsmMorphism& f, const PAsmMorphism& g, std::size_t b_size) {
  if (g.fn.codomain_size() != b_size) throw InvalidArgument("pair_tracked: second map has the wrong target");
  return PAsmMorphism{pair_maps(f.fn, g.fn), Program::pair(f.tracker, g.tracker), f.budget + g.budget + 1};
}

PasmEqualizer equalizer_pasm(const PartitionedAssembly& src, const PartitionedAssembly& tgt,
                             const PointMap& f, const PointMap& g) {
  if (!is_morphism<Pasm>(src, tgt, f) || !is_morphism<Pasm>(src, tgt, g)) {
    throw InvalidArgument("equalizer_pasm: the pair is not a parallel pair of morphisms");
  }
  auto cone = equalizer<Pasm>(src, f, g);
  std::vector<Point> members;
  for (Point x = 0; x < src.size(); ++x) {
    if (cone.index[x]) members.push_back(x);
  }
  return PasmEqualizer{cone.apex, PAsmMorphism{cone.inclusion, Program::input(), 1}, std::move(members)};
}

bool triple_is_monic(const PasmSpan& span) {
  const auto& g = span.graph;
  std::map<std::tuple<Point, Point, Nat>, Point> seen;
  for (Point a = 0; a < g.a1.size(); ++a) {
    if (!seen.emplace(std::make_tuple(g.d1(a), g.d2(a), g.a1.xi[a]), a).second) return false;
  }
  return true;
}

MonicFormSpan monic_form(const PasmSpan& span, std::size_t cap) {
  auto problems = check_equivalence_span(span);
  if (!problems.empty()) throw PreconditionViolation("monic_form needs an equivalence span: " + problems.front());
  const auto& g = span.graph;
  const std::size_t n1 = g.a1.size(), n0 = g.a0.size();

  std::map<std::tuple<Point, Point, Nat>, Point> index;
  for (Point a = 0; a < n1; ++a) index.emplace(std::make_tuple(g.d1(a), g.d2(a), g.a1.xi[a]), 0);
  MonicFormSpan out;
  for (auto& [triple, idx] : index) {
    idx = out.triples.size();
    out.triples.push_back(triple);
  }
  const std::size_t ne = out.triples.size();

  PartitionedAssembly e;
  std::vector<Point> e1(ne), e2(ne), fv(n1), sv(ne, n1);
  for (Point k = 0; k < ne; ++k) {
    e1[k] = std::get<0>(out.triples[k]);
    e2[k] = std::get<1>(out.triples[k]);
    e.xi.push_back(std::get<2>(out.triples[k]));
  }
  for (Point a = 0; a < n1; ++a) {
    fv[a] = index.at(std::make_tuple(g.d1(a), g.d2(a), g.a1.xi[a]));
    if (sv[fv[a]] == n1) sv[fv[a]] = a;  // least preimage
  }
  PointMap f(fv, ne);

  // Structure maps of E through f: each value must not depend on the chosen
  // preimages, since a tracker sees only the realizer.
  auto through_f = [&](std::size_t domain, auto&& preimages, auto&& value, const char* what) {
    std::vector<std::optional<Point>> image(domain);
    preimages([&](Point at, Point v) {
      Point w = fv[value(v)];
      if (image[at] && *image[at] != w) {
        throw InternalInvariant(std::string("monic form: ") + what + " depends on the preimage");
      }
      image[at] = w;
    });
    std::vector<Point> flat(domain);
    for (Point i = 0; i < domain; ++i) flat[i] = image[i].value();
    return PointMap(std::move(flat), ne);
  };

  Graph<Pasm> eg{e, g.a0, PointMap(e1, n0), PointMap(e2, n0)};
  PointMap r = through_f(
      n0, [&](auto emit) { for (Point x = 0; x < n0; ++x) emit(x, x); }, [&](Point x) { return span.r(x); }, "r");
  PointMap s = through_f(
      ne, [&](auto emit) { for (Point a = 0; a < n1; ++a) emit(fv[a], a); }, [&](Point a) { return span.s(a); },
      "s");
  auto epb = composable_pairs(eg);
  auto apb = composable_pairs(g);
  PointMap t = through_f(
      epb.apex.size(),
      [&](auto emit) {
        for (Point p = 0; p < apb.apex.size(); ++p) {
          auto at = epb.index_of(fv[apb.leg1(p)], fv[apb.leg2(p)]);
          if (!at) throw InternalInvariant("monic form: f does not preserve consecutive pairs");
          emit(*at, p);
        }
      },
      [&](Point p) { return span.t(p); }, "t");
  out.span = PasmSpan{eg, r, s, t};

  auto bad = check_equivalence_span(out.span);
  if (!bad.empty()) throw InternalInvariant("monic form is not an equivalence span: " + bad.front());
  if (!triple_is_monic(out.span)) throw InternalInvariant("monic form triple is not injective");

  out.e1 = track_or_throw(e, g.a0, eg.d1);
  out.e2 = track_or_throw(e, g.a0, eg.d2);
  out.f = PAsmMorphism{f, Program::input(), 1};
  out.section = PAsmMorphism{PointMap(sv, n1), Program::input(), 1};
  if (!is_morphism(g.a1, e, out.f) || !is_morphism(e, g.a1, out.section)) {
    throw InternalInvariant("monic form comparison maps are not tracked by the identity");
  }
  out.to_monic = GraphHom{f, PointMap::identity(n0)};
  out.from_monic = GraphHom{out.section.fn, PointMap::identity(n0)};
  if (!is_graph_hom<Pasm>(g, eg, out.to_monic) || !is_graph_hom<Pasm>(eg, g, out.from_monic)) {
    throw InternalInvariant("monic form comparison maps are not span homomorphisms");
  }
  auto there_back = compose_homs(out.from_monic, out.to_monic);
  auto back_there = compose_homs(out.to_monic, out.from_monic);
  if (!homs_identified<Pasm>(g, g, there_back, identity_hom(n1, n0), cap) ||
      !homs_identified<Pasm>(eg, eg, back_there, identity_hom(ne, n0), cap)) {
    throw InternalInvariant("monic form comparison maps are not inverse up to identification");
  }
  return out;
}

Report monic_form_check(const std::vector<NamedPasmSpan>& spans, std::size_t cap) {
  Report report;
  report.suite = "monic-form";
  CheckResult monic{"triples <e1, e2, eps> are monic"};
  CheckResult valid{"E is an equivalence span through f alone"};
  CheckResult iso{"comparison homomorphisms are inverse in the quotient"};
  for (const auto& [name, span] : spans) {
    MonicFormSpan m;
    try {
      m = monic_form(span, cap);
    } catch (const InternalInvariant& e) {
      valid.fail(name + ": " + e.what());
      continue;
    }
    const auto& g = span.graph;
    const auto& eg = m.span.graph;
    const std::size_t n0 = g.a0.size(), n1 = g.a1.size(), ne = eg.a1.size();

    std::set<std::tuple<Point, Point, Nat>> seen;
    for (Point k = 0; k < ne; ++k) seen.emplace(eg.d1(k), eg.d2(k), eg.a1.xi[k]);
    if (seen.size() != ne) monic.fail(name + ": two elements of E share a triple");
    if (!is_morphism(eg.a1, g.a0, m.e1) || !is_morphism(eg.a1, g.a0, m.e2)) monic.fail(name + ": e1 or e2 untracked");

    auto bad = check_equivalence_span(m.span);
    if (!bad.empty()) valid.fail(name + ": " + bad.front());
    // Structure maps of E against those of A, read through f.
    const auto& f = m.f.fn;
    bool agrees = is_morphism(g.a1, eg.a1, m.f);
    for (Point x = 0; x < n0; ++x) agrees = agrees && m.span.r(x) == f(span.r(x));
    for (Point a = 0; a < n1; ++a) agrees = agrees && m.span.s(f(a)) == f(span.s(a));
    auto apb = composable_pairs(g);
    auto epb = composable_pairs(eg);
    for (Point p = 0; p < apb.apex.size(); ++p) {
      auto at = epb.index_of(f(apb.leg1(p)), f(apb.leg2(p)));
      agrees = agrees && at && m.span.t(*at) == f(span.t(p));
    }
    if (!agrees) valid.fail(name + ": structure maps of E disagree with A through f");

    bool inverse = is_graph_hom<Pasm>(g, eg, m.to_monic) && is_graph_hom<Pasm>(eg, g, m.from_monic) &&
                   is_morphism(eg.a1, g.a1, m.section) &&
                   homs_identified<Pasm>(g, g, compose_homs(m.from_monic, m.to_monic), identity_hom(n1, n0), cap) &&
                   homs_identified<Pasm>(eg, eg, compose_homs(m.to_monic, m.from_monic), identity_hom(ne, n0), cap);
    if (!inverse) iso.fail(name);
    iso.note(name + ": |A1| = " + std::to_string(n1) + ", |E| = " + std::to_string(ne));
  }
  report.checks = {monic, valid, iso};
  return report;
}

std::string describe(const PartitionedAssembly& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.xi.size(); ++i) out << (i ? "," : "") << a.xi[i].str();
  out << ']';
  return out.str();
}

}  // namespace eqlab
