#include <doctest.h>

#include <random>
#include <set>

#include "eqlab/error.hpp"
#include "eqlab/spans.hpp"
#include "oracle.hpp"

using namespace eqlab;

namespace {

TopSpan diagonal_span(const FinSpace& s) {
  const std::size_t n = s.size();
  auto id = PointMap::identity(n);
  // Consecutive pairs of the identity graph are the diagonal pairs (x, x).
  return TopSpan{Graph<FinTop>{s, s, id, id}, id, id, id};
}

Equilogical random_equilogical(std::mt19937& rng) {
  static const std::vector<FinSpace> spaces{
      FinSpace::point(), FinSpace::sierpinski(), FinSpace::discrete(2), FinSpace::discrete(3),
      FinSpace::from_opens(3, {{}, {2}, {1, 2}, {0, 1, 2}}), FinSpace::from_opens(3, {{}, {0}, {1}, {0, 1}, {0, 1, 2}})};
  const auto& s = spaces[rng() % spaces.size()];
  std::vector<std::size_t> blocks(s.size());
  for (auto& b : blocks) b = rng() % s.size();
  return Equilogical::make(s, EquivalenceRelation::from_blocks(blocks));
}

std::vector<Equilogical> small_equilogicals() {
  return {embed_T0(FinSpace::point()), embed_T0(FinSpace::sierpinski()), embed_T0(FinSpace::discrete(2)),
          Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2)),
          Equilogical::make(FinSpace::sierpinski(), EquivalenceRelation::total(2)),
          Equilogical::make(FinSpace::from_opens(3, {{}, {2}, {1, 2}, {0, 1, 2}}),
                            EquivalenceRelation::from_blocks({0, 0, 1}))};
}

}  // namespace

TEST_CASE("equivalence span examples") {
  CHECK(is_equivalence_span(diagonal_span(FinSpace::sierpinski())));
  auto total = functor_G(Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2)));
  CHECK(is_equivalence_span(total));
  CHECK(total.graph.a1 == FinSpace::discrete(4));

  // t sending every consecutive pair to the loop at 0 breaks compatibility.
  auto broken = total;
  auto pb = composable_pairs(total.graph);
  broken.t = PointMap::constant(pb.apex.size(), 4, 0);
  auto why = check_equivalence_span(broken);
  REQUIRE_FALSE(why.empty());
  CHECK(why.front().find("compatibility") != std::string::npos);
}

TEST_CASE("identification of homomorphisms") {
  auto d2 = Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::diagonal(2));
  auto t2 = Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2));
  auto a = functor_G(d2);
  auto total = functor_G(t2);
  auto diag = functor_G(d2);
  auto homs = enumerate_graph_homs<FinTop>(a.graph, total.graph);
  REQUIRE(homs.size() == 4);
  for (const auto& h : homs) {
    auto w = homs_identified<FinTop>(a.graph, total.graph, h, h);
    REQUIRE(w);
    CHECK(*w == compose(total.r, h.f0));
    for (const auto& k : homs) {
      auto witness = homs_identified<FinTop>(a.graph, total.graph, h, k);
      REQUIRE(witness);
      CHECK(compose(total.graph.d1, *witness) == h.f0);
      CHECK(compose(total.graph.d2, *witness) == k.f0);
    }
  }
  auto into_diag = enumerate_graph_homs<FinTop>(a.graph, diag.graph);
  for (const auto& h : into_diag) {
    for (const auto& k : into_diag) CHECK(homs_identified<FinTop>(a.graph, diag.graph, h, k).has_value() == (h == k));
  }
}

TEST_CASE("subspatial spans") {
  auto e = Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2));
  CHECK(is_subspatial(functor_G(e)));
  CHECK(is_subspatial(diagonal_span(FinSpace::sierpinski())));
  auto coarse = functor_G(e);
  coarse.graph.a1 = FinSpace::indiscrete(4);
  CHECK_FALSE(is_subspatial(coarse));
  CHECK_THROWS_AS(functor_F(coarse), PreconditionViolation);
}

TEST_CASE("the functors F and G") {
  auto s = FinSpace::sierpinski();
  CHECK(functor_F(diagonal_span(s)) == embed_T0(s));
  auto t2 = Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2));
  CHECK(functor_F(functor_G(t2)) == t2);

  auto one = functor_G(embed_T0(FinSpace::point()));
  CHECK(one.graph.a1.size() == 1);
  CHECK(one.graph.d1 == PointMap::identity(1));

  auto g = functor_G(t2);
  auto id = identity_hom(g.graph.a1.size(), g.graph.a0.size());
  CHECK(functor_F_mor(g, g, id) == identity_equ_map(t2));

  std::mt19937 rng(20);
  for (int round = 0; round < 20; ++round) {
    auto e = random_equilogical(rng);
    CHECK(functor_F(functor_G(e)) == e);
  }
}

TEST_CASE("identification is an equivalence relation") {
  auto fx = small_equilogicals();
  for (const auto& e : fx) {
    for (const auto& f : fx) {
      auto a = functor_G(e), b = functor_G(f);
      auto homs = enumerate_graph_homs<FinTop>(a.graph, b.graph);
      for (const auto& h : homs) {
        CHECK(homs_identified<FinTop>(a.graph, b.graph, h, h));
        for (const auto& k : homs) {
          bool hk = homs_identified<FinTop>(a.graph, b.graph, h, k).has_value();
          CHECK(hk == homs_identified<FinTop>(a.graph, b.graph, k, h).has_value());
          if (!hk) continue;
          for (const auto& l : homs) {
            if (homs_identified<FinTop>(a.graph, b.graph, k, l)) CHECK(homs_identified<FinTop>(a.graph, b.graph, h, l));
          }
        }
      }
    }
  }
}

TEST_CASE("structure maps of subspatial spans are unique") {
  for (const auto& e : small_equilogicals()) {
    auto span = functor_G(e);
    auto sols = solve_structure_maps(span.graph);
    REQUIRE(sols.r.size() == 1);
    REQUIRE(sols.s.size() == 1);
    REQUIRE(sols.t.size() == 1);
    CHECK(sols.r.front() == span.r);
    CHECK(sols.s.front() == span.s);
    CHECK(sols.t.front() == span.t);
  }
}

TEST_CASE("F is full, faithful and its arc components are forced") {
  auto fx = small_equilogicals();
  for (const auto& e : fx) {
    for (const auto& f : fx) {
      auto a = functor_G(e), b = functor_G(f);
      auto homs = enumerate_graph_homs<FinTop>(a.graph, b.graph);
      auto cls = identification_classes<FinTop>(a.graph, b.graph, homs);
      std::set<EquMap> images;
      std::size_t classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
      std::vector<std::optional<EquMap>> per_class(classes);
      for (std::size_t i = 0; i < homs.size(); ++i) {
        auto m = functor_F_mor(a, b, homs[i]);
        images.insert(m);
        if (per_class[cls[i]]) CHECK(*per_class[cls[i]] == m);
        per_class[cls[i]] = m;
        CHECK(forced_arc_map(a, b, homs[i].f0) == homs[i].f1);
      }
      auto equ = equ_hom_set(e, f);
      CHECK(images.size() == classes);
      CHECK(equ.size() == classes);
      for (const auto& c : equ) CHECK(images.count(c.map));
    }
  }
}
