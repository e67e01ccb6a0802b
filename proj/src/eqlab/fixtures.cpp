#include "eqlab/fixtures.hpp"

#include <map>
#include <random>

#include "eqlab/error.hpp"

namespace eqlab {

namespace {

FinSpace chain(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = x; y < n; ++y) leq[x * n + y] = 1;
  }
  return FinSpace::from_order(n, std::move(leq));
}

// 0 and 1 both below 2.
FinSpace vee() { return FinSpace::from_opens(3, {{}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}); }

EquivalenceRelation blocks(std::vector<std::size_t> b) { return EquivalenceRelation::from_blocks(b); }

NumericFixture monic_fixture(const std::string& name, const PasmSpan& s, std::size_t L) {
  return {name, free_dagger_numeric(monic_form(s), L)};
}

}  // namespace

std::vector<NamedTopSpan> top_span_pack() {
  std::vector<NamedTopSpan> out;
  auto add = [&](std::string name, const FinSpace& s, const EquivalenceRelation& r) {
    out.push_back({std::move(name), functor_G(Equilogical::make(s, r))});
  };
  add("point", FinSpace::point(), EquivalenceRelation::diagonal(1));
  add("sierpinski", FinSpace::sierpinski(), EquivalenceRelation::diagonal(2));
  add("sierpinski-total", FinSpace::sierpinski(), EquivalenceRelation::total(2));
  add("discrete2", FinSpace::discrete(2), EquivalenceRelation::diagonal(2));
  add("discrete2-total", FinSpace::discrete(2), EquivalenceRelation::total(2));
  add("chain3", chain(3), EquivalenceRelation::diagonal(3));
  add("chain3-low", chain(3), blocks({0, 0, 1}));
  add("chain3-high", chain(3), blocks({0, 1, 1}));
  add("chain3-ends", chain(3), blocks({0, 1, 0}));
  add("chain3-total", chain(3), EquivalenceRelation::total(3));
  add("vee", vee(), EquivalenceRelation::diagonal(3));
  add("vee-feet", vee(), blocks({0, 0, 1}));
  add("vee-total", vee(), EquivalenceRelation::total(3));
  add("discrete3-pair", FinSpace::discrete(3), blocks({0, 0, 1}));
  add("sierpinski+point", FinSpace::from_opens(3, {{}, {1}, {2}, {1, 2}, {0, 1}, {0, 1, 2}}),
      EquivalenceRelation::diagonal(3));
  add("sierpinski+point-glued", FinSpace::from_opens(3, {{}, {1}, {2}, {1, 2}, {0, 1}, {0, 1, 2}}),
      blocks({0, 1, 0}));
  add("chain4", chain(4), EquivalenceRelation::diagonal(4));
  add("chain4-halves", chain(4), blocks({0, 0, 1, 1}));
  add("chain4-alternating", chain(4), blocks({0, 1, 0, 1}));
  add("chain4-total", chain(4), EquivalenceRelation::total(4));
  add("diamond-sides", FinSpace::from_opens(4, {{}, {3}, {1, 3}, {2, 3}, {1, 2, 3}, {0, 1, 2, 3}}),
      blocks({0, 1, 1, 2}));
  return out;
}

std::vector<SpanGroupoidFixture> groupoid_pack(const std::vector<NamedTopSpan>& spans) {
  std::vector<SpanGroupoidFixture> out;
  for (const auto& s : spans) out.push_back(make_span_fixture(s.name, s.span));
  return out;
}

PasmSpan relation_span(const PartitionedAssembly& nodes, const EquivalenceRelation& rel,
                       const std::vector<std::pair<Point, Point>>& duplicates, ArcRealizers mode) {
  const std::size_t n = nodes.size();
  if (rel.size() != n) throw InvalidArgument("relation_span: relation and nodes differ in size");
  auto pairs = rel.pairs();
  std::map<std::pair<Point, Point>, Point> first;
  for (Point i = 0; i < pairs.size(); ++i) first[pairs[i]] = i;
  for (const auto& d : duplicates) {
    if (!first.count(d)) throw InvalidArgument("relation_span: duplicate of an unrelated pair");
    pairs.push_back(d);
  }
  PartitionedAssembly arcs;
  std::vector<Point> d1, d2;
  for (auto [x, y] : pairs) {
    d1.push_back(x);
    d2.push_back(y);
    arcs.xi.push_back(mode == ArcRealizers::Paired ? cantor_pair(nodes.xi[x], nodes.xi[y]) : Nat(0));
  }
  const std::size_t n1 = pairs.size();
  Graph<Pasm> g{arcs, nodes, PointMap(d1, n), PointMap(d2, n)};
  auto pb = composable_pairs(g);
  std::vector<Point> r(n), s(n1), t(pb.apex.size());
  for (Point x = 0; x < n; ++x) r[x] = first.at({x, x});
  for (Point a = 0; a < n1; ++a) s[a] = first.at({d2[a], d1[a]});
  for (Point p = 0; p < t.size(); ++p) t[p] = first.at({d1[pb.leg1(p)], d2[pb.leg2(p)]});
  PasmSpan span{std::move(g), PointMap(r, n1), PointMap(s, n1), PointMap(t, n1)};
  auto bad = check_equivalence_span(span);
  if (!bad.empty()) throw InvalidArgument("relation_span: " + bad.front());
  return span;
}

std::vector<NamedPasmSpan> pasm_span_pack(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedPasmSpan> out;
  auto nodes = [](std::vector<int> xi) {
    PartitionedAssembly a;
    for (int v : xi) a.xi.push_back(v);
    return a;
  };
  out.push_back({"point", relation_span(nodes({0}), EquivalenceRelation::diagonal(1))});
  out.push_back({"point-doubled", relation_span(nodes({3}), EquivalenceRelation::diagonal(1), {{0, 0}})});
  out.push_back({"diagonal", relation_span(nodes({1, 2}), EquivalenceRelation::diagonal(2))});
  out.push_back({"total-constant",
                 relation_span(nodes({0, 0}), EquivalenceRelation::total(2), {}, ArcRealizers::Constant)});
  out.push_back({"total-doubled", relation_span(nodes({1, 2}), EquivalenceRelation::total(2), {{0, 1}})});
  out.push_back({"two-classes", relation_span(nodes({0, 1, 2}), blocks({0, 0, 1}))});
  out.push_back({"two-classes-shared", relation_span(nodes({4, 4, 5}), blocks({0, 0, 1}))});

  std::mt19937_64 rng(seed);
  while (out.size() < 7 + random_count) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<std::size_t> b(n);
    for (auto& v : b) v = rng() % n;
    auto rel = EquivalenceRelation::from_blocks(b);
    auto pairs = rel.pairs();
    if (pairs.size() > 5) continue;
    PartitionedAssembly a;
    for (std::size_t x = 0; x < n; ++x) a.xi.push_back(rng() % 4);
    std::vector<std::pair<Point, Point>> dup;
    const std::size_t room = 5 - pairs.size();
    const std::size_t extra = room == 0 ? 0 : rng() % (room + 1);
    for (std::size_t k = 0; k < extra; ++k) dup.push_back(pairs[rng() % pairs.size()]);
    out.push_back({"random" + std::to_string(out.size() - 7), relation_span(a, rel, dup)});
  }
  return out;
}

std::vector<NumericFixture> numeric_pack(std::size_t L) {
  PartitionedAssembly one{{0}}, two{{0, 1}};
  std::vector<NumericFixture> out;
  out.push_back(monic_fixture("point", relation_span(one, EquivalenceRelation::diagonal(1)), L));
  out.push_back(monic_fixture("diagonal2", relation_span(two, EquivalenceRelation::diagonal(2)), L));
  out.push_back(monic_fixture("total2", relation_span(two, EquivalenceRelation::total(2)), L));
  out.push_back({"interval", interval_two_groupoid(L)});
  out.push_back({"path3", {path_base(), L}});
  return out;
}

std::vector<TopGroupoid> groupoid_interval_samples() {
  return {terminal_groupoid(), interval_groupoid(), groupoid_of(embed_T0(FinSpace::sierpinski())),
          groupoid_of(embed_T0(FinSpace::discrete(2))), indiscrete_groupoid(3)};
}

std::vector<TopGroupoid> groupoid_interval_tests() {
  return {terminal_groupoid(), interval_groupoid(), groupoid_of(embed_T0(FinSpace::discrete(2))),
          groupoid_of(embed_T0(FinSpace::sierpinski()))};
}

namespace {

NumericBase loop_base() { return NumericBase{PartitionedAssembly{{0}}, {{0, 0, 0, "l"}}, {}}; }
NumericBase discrete_base(std::size_t n) {
  NumericBase b;
  for (std::size_t x = 0; x < n; ++x) b.nodes.xi.push_back(x);
  return b;
}

}  // namespace

std::vector<NumericBase> numeric_interval_samples() {
  return {terminal_base(), interval_base(), loop_base(), discrete_base(2), discrete_base(3)};
}

std::vector<NumericBase> numeric_interval_tests() {
  return {terminal_base(), interval_base(), loop_base(), discrete_base(2)};
}

namespace {

Program grow(std::mt19937_64& rng, std::size_t depth, bool in_loop) {
  if (depth == 0 || rng() % 4 == 0) return rng() % 2 ? Program::input() : Program::constant(rng() % 5);
  auto sub = [&](bool loop_body = false) { return grow(rng, depth - 1, in_loop || loop_body); };
  switch (rng() % (in_loop ? 9 : 10)) {
    case 0: return Program::succ(sub());
    case 1: return Program::pred(sub());
    case 2: return Program::sub(sub(), sub());
    case 3: return Program::fst(sub());
    case 4: return Program::snd(sub());
    case 5: {
      auto c = sub();
      auto t = sub();
      return Program::ifz(c, t, sub());
    }
    case 6: {
      auto outer = sub();
      return Program::comp(outer, sub());
    }
    case 7:
    case 8: {
      auto body = sub(true);
      return Program::loop(body, sub());
    }
    default: {
      auto a = sub();
      return Program::pair(a, sub());
    }
  }
}

}  // namespace

Program random_program(std::mt19937_64& rng, std::size_t depth) { return grow(rng, depth, false); }

}  // namespace eqlab
