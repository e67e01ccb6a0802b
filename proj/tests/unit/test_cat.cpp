#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqlab/cat.hpp"
#include "eqlab/equ.hpp"
#include "eqlab/fintop.hpp"
#include "eqlab/spans.hpp"
#include "oracle.hpp"

using namespace eqlab;

namespace {

std::vector<FinSpace> small_spaces() {
  return {FinSpace::point(), FinSpace::sierpinski(), FinSpace::discrete(2),
          FinSpace::from_opens(3, {{}, {2}, {1, 2}, {0, 1, 2}})};
}

}  // namespace

TEST_CASE("category laws on a single identity") {
  FiniteCategory c;
  c.objects = {"*"};
  c.arrows = {{0, 0, "id"}};
  c.identity = {0};
  c.compose[{0, 0}] = 0;
  CHECK(audit_category_laws(c).empty());
}

TEST_CASE("category laws of finite spaces") {
  auto cat = materialize<FinTop>({FinSpace::point(), FinSpace::sierpinski(), FinSpace::discrete(2)},
                                 {"1", "S", "D2"});
  std::size_t expected = 0;
  std::vector<FinSpace> objs{FinSpace::point(), FinSpace::sierpinski(), FinSpace::discrete(2)};
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& f : oracle::all_functions(a.size(), b.size())) {
        expected += oracle::continuous(oracle::from_space(a), oracle::from_space(b), f);
      }
    }
  }
  CHECK(cat.arrows.size() == expected);
  CHECK(audit_category_laws(cat).empty());
}

TEST_CASE("a corrupted composite is detected as an associativity failure") {
  auto cat = materialize<FinTop>({FinSpace::sierpinski(), FinSpace::discrete(2)}, {"S", "D2"});
  bool detected_some = false;
  for (const auto& [key, value] : cat.compose) {
    auto [g, f] = key;
    if (std::count(cat.identity.begin(), cat.identity.end(), g) ||
        std::count(cat.identity.begin(), cat.identity.end(), f)) {
      continue;
    }
    for (std::size_t w = 0; w < cat.arrows.size(); ++w) {
      if (w == value || cat.arrows[w].source != cat.arrows[value].source ||
          cat.arrows[w].target != cat.arrows[value].target) {
        continue;
      }
      auto bad = cat;
      bad.compose[key] = w;
      auto report = audit_category_laws(bad);
      for (const auto& v : report) {
        if (v.law == "associativity" && std::count(v.arrows.begin(), v.arrows.end(), g) &&
            std::count(v.arrows.begin(), v.arrows.end(), f)) {
          detected_some = true;
        }
      }
      CHECK_FALSE(report.empty());
    }
  }
  CHECK(detected_some);

  // id . id redirected to a constant endomap breaks the unit laws.
  auto bad = cat;
  auto id = cat.identity[0];
  std::size_t other = 0;
  while (other == id || cat.arrows[other].source != 0 || cat.arrows[other].target != 0) ++other;
  bad.compose[{id, id}] = other;
  auto report = audit_category_laws(bad);
  CHECK(std::any_of(report.begin(), report.end(), [](const LawViolation& v) { return v.law == "left-unit"; }));
}

TEST_CASE("joint monicity") {
  CHECK(is_jointly_monic({PointMap::identity(3), PointMap::identity(3)}));
  // Total relation on two points: A1 lists all four pairs.
  CHECK(is_jointly_monic({PointMap({0, 0, 1, 1}, 2), PointMap({0, 1, 0, 1}, 2)}));
  CHECK_FALSE(is_jointly_monic({PointMap({0, 0, 1, 1, 1}, 2), PointMap({0, 1, 0, 1, 1}, 2)}));
}

TEST_CASE("joint monicity by probes agrees with injectivity of the tupling") {
  std::mt19937 rng(17);
  auto a1 = FinSpace::discrete(4);
  for (int round = 0; round < 40; ++round) {
    std::vector<Point> u(4), v(4);
    for (auto& x : u) x = rng() % 2;
    for (auto& x : v) x = rng() % 2;
    MorphismPair p{PointMap(u, 2), PointMap(v, 2)};
    CHECK(is_jointly_monic(p) ==
          is_jointly_monic_by_probes<FinTop>(a1, p, {FinSpace::point(), FinSpace::discrete(2)}));
  }
}

TEST_CASE("pullback examples") {
  auto s = FinSpace::sierpinski();
  auto id = pullback<FinTop>(s, s, PointMap::identity(2), PointMap::identity(2));
  CHECK(id.apex == s);
  CHECK(id.leg1 == PointMap::identity(2));
  CHECK(id.leg2 == PointMap::identity(2));

  auto d2 = FinSpace::discrete(2);
  auto over_point = pullback<FinTop>(d2, d2, PointMap::constant(2, 1, 0), PointMap::constant(2, 1, 0));
  CHECK(over_point.apex.size() == 4);

  // Consecutive pairs of the total relation on two points, counted directly.
  auto g = functor_G(Equilogical::make(d2, EquivalenceRelation::total(2)));
  auto pairs = composable_pairs(g.graph);
  std::size_t brute = 0;
  for (Point a = 0; a < 4; ++a) {
    for (Point b = 0; b < 4; ++b) brute += g.graph.d2(a) == g.graph.d1(b);
  }
  CHECK(brute == 8);
  CHECK(pairs.apex.size() == brute);
}

TEST_CASE("limit cones are universal in finite spaces") {
  auto spaces = small_spaces();
  std::vector<FinSpace> tests{FinSpace::point(), FinSpace::sierpinski(), FinSpace::discrete(2)};
  for (const auto& a : spaces) {
    for (const auto& b : spaces) {
      auto cone = product<FinTop>(a, b);
      auto r = check_product_universal<FinTop>(a, b, cone, tests);
      CHECK_MESSAGE(r.holds, r.failure);
      for (const auto& f : hom_set<FinTop>(a, b)) {
        for (const auto& g : hom_set<FinTop>(a, b)) {
          auto eq = equalizer<FinTop>(a, f, g);
          auto er = check_equalizer_universal<FinTop>(a, f, g, eq, tests);
          CHECK_MESSAGE(er.holds, er.failure);
        }
      }
    }
  }
  auto s = FinSpace::sierpinski();
  for (const auto& f : hom_set<FinTop>(s, s)) {
    for (const auto& g : hom_set<FinTop>(FinSpace::discrete(2), s)) {
      auto pb = pullback<FinTop>(s, FinSpace::discrete(2), f, g);
      auto r = check_pullback_universal<FinTop>(s, FinSpace::discrete(2), f, g, pb, tests);
      CHECK_MESSAGE(r.holds, r.failure);
    }
  }
}

TEST_CASE("limit cones are universal for equilogical representatives") {
  auto e = Equilogical::make(FinSpace::discrete(2), EquivalenceRelation::total(2));
  auto s = embed_T0(FinSpace::sierpinski());
  std::vector<Equilogical> tests{embed_T0(FinSpace::point()), e, s};
  auto cone = product<EquReps>(e, s);
  auto r = check_product_universal<EquReps>(e, s, cone, tests);
  CHECK_MESSAGE(r.holds, r.failure);
}

TEST_CASE("the hom-set search honours its cap") {
  auto d = FinSpace::discrete(4);
  CHECK(hom_set<FinTop>(d, d).size() == 256);
  CHECK_THROWS_AS(hom_set<FinTop>(d, d, 100), CapExceeded);
}
