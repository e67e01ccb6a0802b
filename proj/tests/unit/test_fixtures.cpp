#include <doctest.h>

#include <set>

#include "eqlab/error.hpp"
#include "eqlab/fixtures.hpp"

using namespace eqlab;

TEST_CASE("top span pack") {
  auto pack = top_span_pack();
  CHECK(pack.size() >= 20);
  std::set<std::string> names;
  for (const auto& s : pack) {
    names.insert(s.name);
    CHECK(s.span.graph.a0.size() <= 4);
    CHECK(is_subspatial(s.span));
    CHECK(check_equivalence_span(s.span).empty());
    CHECK(is_T0(s.span.graph.a0));
  }
  CHECK(names.size() == pack.size());
}

TEST_CASE("equ-equivalence on a slice of the pack") {
  auto pack = top_span_pack();
  pack.resize(6);
  auto r = equ_equivalence_check(pack);
  CHECK_MESSAGE(r.passed(), render_text(r));
  CHECK(r.suite == "equ-equivalence");

  // Two parallel arcs over one point: an equivalence span, but not subspatial.
  Graph<FinTop> g{FinSpace::discrete(2), FinSpace::point(), PointMap::constant(2, 1, 0), PointMap::constant(2, 1, 0)};
  auto pb = composable_pairs(g);
  TopSpan doubled{g, PointMap::constant(1, 2, 0), PointMap::identity(2), pb.leg1};
  REQUIRE(check_equivalence_span(doubled).empty());
  auto bad = equ_equivalence_check({{"doubled", doubled}});
  CHECK_FALSE(bad.passed());
}

TEST_CASE("pasm span pack") {
  auto pack = pasm_span_pack();
  CHECK(pack.size() == 23);
  for (const auto& s : pack) {
    CHECK(s.span.graph.a0.size() <= 3);
    CHECK(s.span.graph.a1.size() <= 5);
    CHECK(check_equivalence_span(s.span).empty());
  }
  auto again = pasm_span_pack();
  auto other = pasm_span_pack(kDefaultSeed + 1);
  bool same = true, differs = false;
  for (std::size_t i = 0; i < pack.size(); ++i) {
    same = same && pack[i].span.graph.a0.xi == again[i].span.graph.a0.xi &&
           pack[i].span.graph.a1.xi == again[i].span.graph.a1.xi;
    differs = differs || pack[i].span.graph.a1.xi != other[i].span.graph.a1.xi;
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("relation spans") {
  PartitionedAssembly two{{3, 4}};
  auto s = relation_span(two, EquivalenceRelation::total(2), {{1, 0}});
  CHECK(s.graph.a1.size() == 5);
  CHECK(s.graph.a1.xi[1] == cantor_pair(3, 4));
  CHECK(s.s(4) == 1);  // the duplicate (1, 0) reverses to the first (0, 1)
  CHECK_THROWS_AS(relation_span(two, EquivalenceRelation::diagonal(2), {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(relation_span(two, EquivalenceRelation::diagonal(3)), InvalidArgument);
  // Constant arc realizers over distinct node realizers break realizer consistency of s.
  CHECK_THROWS_AS(relation_span(two, EquivalenceRelation::total(2), {}, ArcRealizers::Constant), InvalidArgument);
}

TEST_CASE("numeric pack") {
  for (const auto& f : numeric_pack(2)) {
    CHECK(f.groupoid.L == 2);
    CHECK(f.groupoid.base.node_count() <= 3);
    CHECK(check_base(f.groupoid.base).empty());
    std::set<Nat> xi(f.groupoid.base.nodes.xi.begin(), f.groupoid.base.nodes.xi.end());
    CHECK(xi.size() == f.groupoid.base.node_count());
  }
}
