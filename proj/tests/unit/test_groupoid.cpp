#include <doctest.h>

#include <algorithm>

#include "eqlab/error.hpp"
#include "eqlab/groupoid.hpp"

using namespace eqlab;

namespace {

Equilogical total(std::size_t n) {
  return Equilogical::make(FinSpace::discrete(n), EquivalenceRelation::total(n));
}

std::vector<SpanGroupoidFixture> small_suite() {
  std::vector<SpanGroupoidFixture> out;
  auto add = [&](std::string name, const Equilogical& e) { out.push_back(make_span_fixture(name, functor_G(e))); };
  add("point", embed_T0(FinSpace::point()));
  add("sierpinski", embed_T0(FinSpace::sierpinski()));
  add("discrete2", embed_T0(FinSpace::discrete(2)));
  add("total2", total(2));
  add("sierpinski-total", Equilogical::make(FinSpace::sierpinski(), EquivalenceRelation::total(2)));
  add("chain3-split", Equilogical::make(FinSpace::from_opens(3, {{}, {2}, {1, 2}, {0, 1, 2}}),
                                        EquivalenceRelation::from_blocks({0, 0, 1})));
  return out;
}

bool report_has_failure(const Report& r, const std::string& check) {
  return std::any_of(r.checks.begin(), r.checks.end(),
                     [&](const CheckResult& c) { return c.name == check && !c.passed; });
}

}  // namespace

TEST_CASE("groupoid laws") {
  auto one = terminal_groupoid();
  CHECK(one.objects() == 1);
  CHECK(one.arrows() == 1);
  CHECK(is_groupoid(one));

  auto I = interval_groupoid();
  CHECK(is_groupoid(I));

  // Send one non-identity arrow to itself under s: the inverse laws fail there.
  auto broken = I;
  std::vector<Point> s{0, 1, 1, 3};
  broken.s = PointMap(s, 4);
  auto why = check_groupoid(broken);
  CHECK_FALSE(why.empty());
  CHECK_FALSE(is_groupoid(broken));
}

TEST_CASE("the interval groupoid") {
  auto I = interval_groupoid();
  CHECK(I.objects() == 2);
  CHECK(I.arrows() == I.objects() * I.objects());
  CHECK(I.graph.a0 == FinSpace::discrete(2));
  CHECK(I.graph.a1 == FinSpace::discrete(4));
  // One arrow per ordered pair of objects.
  for (Point x = 0; x < 2; ++x) {
    for (Point y = 0; y < 2; ++y) {
      std::size_t count = 0;
      for (Point a = 0; a < 4; ++a) count += I.source(a) == x && I.target(a) == y;
      CHECK(count == 1);
    }
  }
  CHECK(I.then(1, 2) == I.i(0));
  CHECK(I.then(2, 1) == I.i(1));
}

TEST_CASE("groupoids from jointly monic spans") {
  auto s = FinSpace::sierpinski();
  auto diag = groupoid_from_jointly_monic(functor_G(embed_T0(s)));
  CHECK(diag.arrows() == diag.objects());
  for (Point a = 0; a < diag.arrows(); ++a) CHECK(diag.source(a) == diag.target(a));

  for (const auto& fx : small_suite()) CHECK(is_groupoid(fx.groupoid));

  // Duplicate an arc: still an equivalence span, no longer jointly monic.
  auto span = functor_G(total(2));
  TopSpan dup;
  dup.graph = Graph<FinTop>{FinSpace::discrete(5), span.graph.a0, PointMap({0, 0, 1, 1, 1}, 2),
                            PointMap({0, 1, 0, 1, 1}, 2)};
  dup.r = PointMap({0, 3}, 5);
  dup.s = PointMap({0, 2, 1, 3, 4}, 5);
  auto pb = composable_pairs(dup.graph);
  std::vector<Point> t(pb.apex.size());
  for (Point p = 0; p < t.size(); ++p) t[p] = dup.graph.d1(pb.leg1(p)) * 2 + dup.graph.d2(pb.leg2(p));
  dup.t = PointMap(t, 5);
  REQUIRE(is_equivalence_span(dup));
  CHECK_THROWS_AS(groupoid_from_jointly_monic(dup), PreconditionViolation);
}

TEST_CASE("graph homomorphisms into jointly monic groupoids are functors") {
  auto suite = small_suite();
  for (const auto& x : suite) {
    for (const auto& y : suite) {
      for (const auto& h : enumerate_graph_homs<FinTop>(x.groupoid.graph, y.groupoid.graph)) {
        auto f = graph_hom_is_functor(x.groupoid, y.groupoid, h);
        CHECK(f == h);
      }
    }
    auto id = identity_hom(x.groupoid.arrows(), x.groupoid.objects());
    CHECK(graph_hom_is_functor(x.groupoid, x.groupoid, id) == id);
    auto one = terminal_groupoid();
    auto to_one = constant_functor(x.groupoid.arrows(), x.groupoid.objects(), 0, 0, 1, 1);
    CHECK(is_functor(x.groupoid, one, graph_hom_is_functor(x.groupoid, one, to_one)));
  }
}

TEST_CASE("natural transformations") {
  auto I = interval_groupoid();
  auto one = terminal_groupoid();
  auto e0 = constant_functor(1, 1, I.i(0), 0, 4, 2);
  auto e1 = constant_functor(1, 1, I.i(1), 1, 4, 2);
  CHECK(nat_trans_check(one, I, e0, e0, compose(I.i, e0.f0)));
  // The arrow 0 -> 1 connects the two constants.
  CHECK(nat_trans_check(one, I, e0, e1, PointMap::constant(1, 4, 1)));
  CHECK_FALSE(nat_trans_check(one, I, e0, e1, PointMap::constant(1, 4, 2)));

  auto d2 = groupoid_of(embed_T0(FinSpace::discrete(2)));
  auto c0 = constant_functor(1, 1, 0, 0, 2, 2);
  auto c1 = constant_functor(1, 1, 1, 1, 2, 2);
  for (Point a = 0; a < 2; ++a) CHECK_FALSE(nat_trans_check(one, d2, c0, c1, PointMap::constant(1, 2, a)));
}

TEST_CASE("homotopic functors two ways") {
  auto I = interval_groupoid();
  auto one = terminal_groupoid();
  auto e0 = constant_functor(1, 1, I.i(0), 0, 4, 2);
  auto e1 = constant_functor(1, 1, I.i(1), 1, 4, 2);
  auto w = homotopic_functors(one, I, e0, e1);
  REQUIRE(w);
  CHECK((*w)(0) == 1);
  CHECK(find_cylinder_homotopy(one, I, e0, e1));
  CHECK(homotopic_functors(one, I, e0, e0));

  auto d2 = groupoid_of(embed_T0(FinSpace::discrete(2)));
  auto c0 = constant_functor(1, 1, 0, 0, 2, 2);
  auto c1 = constant_functor(1, 1, 1, 1, 2, 2);
  CHECK_FALSE(homotopic_functors(one, d2, c0, c1));
  CHECK_FALSE(find_cylinder_homotopy(one, d2, c0, c1));

  auto suite = small_suite();
  for (const auto& x : suite) {
    for (const auto& y : suite) {
      auto fs = enumerate_functors<FinTop>(x.groupoid, y.groupoid);
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          bool a = homotopic_functors(x.groupoid, y.groupoid, f, g).has_value();
          auto k = find_cylinder_homotopy(x.groupoid, y.groupoid, f, g);
          CHECK(a == k.has_value());
        }
      }
    }
  }
}

TEST_CASE("interval structure of groupoids") {
  auto d = groupoid_interval_data();
  auto tests = std::vector<TopGroupoid>{terminal_groupoid(), interval_groupoid(),
                                        groupoid_of(embed_T0(FinSpace::discrete(2)))};
  auto samples = std::vector<TopGroupoid>{terminal_groupoid(), interval_groupoid(),
                                          groupoid_of(embed_T0(FinSpace::sierpinski()))};
  auto report = verify_interval_structure<GroupoidModel>(d, samples, tests);
  CHECK_MESSAGE(report.passed(), render_text(report));

  auto no_swap = d;
  no_swap.iota = GroupoidModel::identity(d.interval);
  auto bad = verify_interval_structure<GroupoidModel>(no_swap, {}, tests);
  CHECK(report_has_failure(bad, "iota.e0 = e1"));
  CHECK(report_has_failure(bad, "iota.e1 = e0"));

  auto T = terminal_groupoid();
  auto id = GroupoidModel::identity(T);
  IntervalObjectData<GroupoidModel> degenerate{T, T, T, id, id, id, id, id, id};
  auto trivial = verify_interval_structure<GroupoidModel>(degenerate, {T, interval_groupoid()}, tests);
  CHECK_MESSAGE(trivial.passed(), render_text(trivial));
}

TEST_CASE("homotopy quotient against Equ") {
  auto single = std::vector<SpanGroupoidFixture>{small_suite().front()};
  CHECK(homotopy_quotient_equals_Equ(single).passed());
  auto report = homotopy_quotient_equals_Equ(small_suite());
  CHECK_MESSAGE(report.passed(), render_text(report));
}
