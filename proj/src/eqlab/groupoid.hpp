#pragma once

// Groupoid objects in a finite concrete category, functors between them,
// natural transformations as homotopies, and the interval-object contract
// checked against any model that can enumerate its hom-sets.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/cat.hpp"
#include "eqlab/report.hpp"
#include "eqlab/spans.hpp"

namespace eqlab {

template <ConcreteCategory C>
struct GroupoidInC {
  Graph<C> graph;
  PointMap i;  // G0 -> G1
  PointMap c;  // composable pairs -> G1; c(a, b) is "a then b"
  PointMap s;  // G1 -> G1
  PullbackCone<C> pairs;

  std::size_t objects() const { return C::size(graph.a0); }
  std::size_t arrows() const { return C::size(graph.a1); }
  Point source(Point a) const { return graph.d1(a); }
  Point target(Point a) const { return graph.d2(a); }
  // a then b; requires target(a) == source(b).
  Point then(Point a, Point b) const { return c(pairs.index_of(a, b).value()); }
};

template <ConcreteCategory C>
GroupoidInC<C> make_groupoid(Graph<C> graph, PointMap i, PointMap c, PointMap s) {
  auto pairs = composable_pairs(graph);
  return GroupoidInC<C>{std::move(graph), std::move(i), std::move(c), std::move(s), std::move(pairs)};
}

// Functors are graph homomorphisms that also respect i and c.
using GroupoidFunctor = GraphHom;

template <ConcreteCategory C>
std::vector<std::string> check_groupoid(const GroupoidInC<C>& g) {
  auto out = check_graph(g.graph);
  if (!out.empty()) return out;
  const std::size_t n0 = g.objects(), n1 = g.arrows(), np = C::size(g.pairs.apex);
  if (g.i.domain_size() != n0 || g.i.codomain_size() != n1) return {"i has the wrong endpoints"};
  if (g.s.domain_size() != n1 || g.s.codomain_size() != n1) return {"s has the wrong endpoints"};
  if (g.c.domain_size() != np || g.c.codomain_size() != n1) return {"c has the wrong endpoints"};
  if (!is_morphism<C>(g.graph.a0, g.graph.a1, g.i)) out.push_back("i is not a morphism");
  if (!is_morphism<C>(g.graph.a1, g.graph.a1, g.s)) out.push_back("s is not a morphism");
  if (!is_morphism<C>(g.pairs.apex, g.graph.a1, g.c)) out.push_back("c is not a morphism");
  const auto arrow = [](Point a) { return "arrow " + std::to_string(a); };
  for (Point x = 0; x < n0; ++x) {
    if (g.source(g.i(x)) != x || g.target(g.i(x)) != x) out.push_back("i is not a loop at object " + std::to_string(x));
  }
  if (!out.empty()) return out;
  for (Point p = 0; p < np; ++p) {
    Point a = g.pairs.leg1(p), b = g.pairs.leg2(p);
    if (g.source(g.c(p)) != g.source(a) || g.target(g.c(p)) != g.target(b)) {
      out.push_back("composite of " + arrow(a) + " and " + arrow(b) + " has the wrong endpoints");
    }
  }
  if (!out.empty()) return out;
  for (Point a = 0; a < n1; ++a) {
    if (g.then(g.i(g.source(a)), a) != a) out.push_back("left unit fails at " + arrow(a));
    if (g.then(a, g.i(g.target(a))) != a) out.push_back("right unit fails at " + arrow(a));
    if (g.s(g.s(a)) != a) out.push_back("s is not an involution at " + arrow(a));
    if (g.source(g.s(a)) != g.target(a) || g.target(g.s(a)) != g.source(a)) {
      out.push_back("s does not reverse " + arrow(a));
      continue;
    }
    if (g.then(a, g.s(a)) != g.i(g.source(a))) out.push_back("s(a) is not a right inverse at " + arrow(a));
    if (g.then(g.s(a), a) != g.i(g.target(a))) out.push_back("s(a) is not a left inverse at " + arrow(a));
  }
  for (Point p = 0; p < np; ++p) {
    Point a = g.pairs.leg1(p), b = g.pairs.leg2(p);
    for (Point e = 0; e < n1; ++e) {
      if (g.source(e) != g.target(b)) continue;
      if (g.then(g.then(a, b), e) != g.then(a, g.then(b, e))) {
        out.push_back("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                      std::to_string(e) + ")");
      }
    }
  }
  return out;
}

template <ConcreteCategory C>
bool is_groupoid(const GroupoidInC<C>& g) {
  return check_groupoid(g).empty();
}

// An equivalence span with jointly monic legs, read as a groupoid: i = r,
// c = t, s = s.
template <ConcreteCategory C>
GroupoidInC<C> groupoid_from_jointly_monic(const EquivalenceSpan<C>& e) {
  auto bad = check_equivalence_span(e);
  if (!bad.empty()) throw PreconditionViolation("not an equivalence span: " + bad.front());
  if (!is_jointly_monic(e.graph.legs())) throw PreconditionViolation("legs are not jointly monic");
  auto g = make_groupoid<C>(e.graph, e.r, e.t, e.s);
  auto laws = check_groupoid(g);
  if (!laws.empty()) throw InternalInvariant("jointly monic equivalence span is not a groupoid: " + laws.front());
  return g;
}

template <ConcreteCategory C>
std::vector<std::string> check_functor(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GroupoidFunctor& f) {
  if (!is_graph_hom<C>(h.graph, g.graph, f)) return {"not a homomorphism of the underlying graphs"};
  std::vector<std::string> out;
  for (Point x = 0; x < h.objects(); ++x) {
    if (f.f1(h.i(x)) != g.i(f.f0(x))) out.push_back("identity not preserved at object " + std::to_string(x));
  }
  for (Point p = 0; p < C::size(h.pairs.apex); ++p) {
    Point a = h.pairs.leg1(p), b = h.pairs.leg2(p);
    if (f.f1(h.c(p)) != g.then(f.f1(a), f.f1(b))) {
      out.push_back("composite not preserved at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  for (Point a = 0; a < h.arrows(); ++a) {
    if (f.f1(h.s(a)) != g.s(f.f1(a))) out.push_back("involution not preserved at arrow " + std::to_string(a));
  }
  return out;
}

template <ConcreteCategory C>
bool is_functor(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GroupoidFunctor& f) {
  return check_functor(h, g, f).empty();
}

// Into a groupoid with jointly monic legs, every graph homomorphism is a
// functor; a failed verification is an internal error.
template <ConcreteCategory C>
GroupoidFunctor graph_hom_is_functor(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GraphHom& f) {
  if (!is_jointly_monic(g.graph.legs())) throw PreconditionViolation("target legs are not jointly monic");
  if (!is_graph_hom<C>(h.graph, g.graph, f)) throw PreconditionViolation("not a graph homomorphism");
  auto bad = check_functor(h, g, f);
  if (!bad.empty()) throw InternalInvariant("graph homomorphism into a jointly monic groupoid: " + bad.front());
  return f;
}

template <ConcreteCategory C>
std::vector<GroupoidFunctor> enumerate_functors(const GroupoidInC<C>& h, const GroupoidInC<C>& g,
                                                std::size_t cap = kDefaultCap) {
  std::vector<GroupoidFunctor> out;
  for (auto& f : enumerate_graph_homs<C>(h.graph, g.graph, cap)) {
    if (is_functor(h, g, f)) out.push_back(std::move(f));
  }
  return out;
}

// The functor with object part f0 whose arrow part is forced by endpoints,
// when the target legs are jointly monic and the result is a functor.
template <ConcreteCategory C>
std::optional<GroupoidFunctor> forced_functor(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const PointMap& f0) {
  std::map<std::pair<Point, Point>, Point> by_ends;
  for (Point b = 0; b < g.arrows(); ++b) {
    if (!by_ends.emplace(std::make_pair(g.source(b), g.target(b)), b).second) {
      throw PreconditionViolation("forced_functor needs jointly monic target legs");
    }
  }
  std::vector<Point> f1(h.arrows());
  for (Point a = 0; a < h.arrows(); ++a) {
    auto it = by_ends.find({f0(h.source(a)), f0(h.target(a))});
    if (it == by_ends.end()) return std::nullopt;
    f1[a] = it->second;
  }
  GroupoidFunctor f{PointMap(std::move(f1), g.arrows()), f0};
  if (!is_functor(h, g, f)) return std::nullopt;
  return f;
}

// d1.a = f0 and d2.a = g0, with a a morphism H0 -> G1. With jointly monic
// target legs this already makes a natural.
template <ConcreteCategory C>
bool nat_trans_check(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GroupoidFunctor& f,
                     const GroupoidFunctor& fp, const PointMap& a) {
  if (!is_jointly_monic(g.graph.legs())) throw PreconditionViolation("target legs are not jointly monic");
  if (a.domain_size() != h.objects() || a.codomain_size() != g.arrows()) return false;
  if (!is_morphism<C>(h.graph.a0, g.graph.a1, a)) return false;
  return compose(g.graph.d1, a) == f.f0 && compose(g.graph.d2, a) == fp.f0;
}

// The naturality squares themselves: F(h) then a(y) equals a(x) then F'(h).
template <ConcreteCategory C>
bool is_natural(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GroupoidFunctor& f,
                const GroupoidFunctor& fp, const PointMap& a) {
  for (Point x = 0; x < h.objects(); ++x) {
    if (g.source(a(x)) != f.f0(x) || g.target(a(x)) != fp.f0(x)) return false;
  }
  for (Point e = 0; e < h.arrows(); ++e) {
    if (g.then(f.f1(e), a(h.target(e))) != g.then(a(h.source(e)), fp.f1(e))) return false;
  }
  return true;
}

// A witness a : H0 -> G1 passing nat_trans_check, also checked natural.
template <ConcreteCategory C>
std::optional<PointMap> homotopic_functors(const GroupoidInC<C>& h, const GroupoidInC<C>& g, const GroupoidFunctor& f,
                                           const GroupoidFunctor& fp, std::size_t cap = kDefaultCap) {
  std::vector<std::vector<Point>> fibres(h.objects());
  for (Point x = 0; x < h.objects(); ++x) {
    for (Point b = 0; b < g.arrows(); ++b) {
      if (g.source(b) == f.f0(x) && g.target(b) == fp.f0(x)) fibres[x].push_back(b);
    }
    if (fibres[x].empty()) return std::nullopt;
  }
  std::optional<PointMap> witness;
  enumerate_maps<C>(h.graph.a0, g.graph.a1, fibres, cap, [&](const PointMap& a) {
    if (!nat_trans_check(h, g, f, fp, a)) return true;
    if (!is_natural(h, g, f, fp, a)) {
      throw InternalInvariant("a transformation into a jointly monic groupoid is not natural");
    }
    witness = a;
    return false;
  });
  return witness;
}

template <ConcreteCategory C>
struct ProductGroupoid {
  GroupoidInC<C> groupoid;
  GroupoidFunctor proj1;
  GroupoidFunctor proj2;
};

template <ConcreteCategory C>
ProductGroupoid<C> product_groupoid(const GroupoidInC<C>& h, const GroupoidInC<C>& k) {
  auto objs = product<C>(h.graph.a0, k.graph.a0);
  auto arrs = product<C>(h.graph.a1, k.graph.a1);
  const std::size_t k1 = k.arrows();
  Graph<C> graph{arrs.apex, objs.apex, pair_maps(compose(h.graph.d1, arrs.leg1), compose(k.graph.d1, arrs.leg2)),
                 pair_maps(compose(h.graph.d2, arrs.leg1), compose(k.graph.d2, arrs.leg2))};
  PointMap i = pair_maps(compose(h.i, objs.leg1), compose(k.i, objs.leg2));
  PointMap s = pair_maps(compose(h.s, arrs.leg1), compose(k.s, arrs.leg2));
  auto pairs = composable_pairs(graph);
  std::vector<Point> c(C::size(pairs.apex));
  for (Point p = 0; p < c.size(); ++p) {
    Point u = pairs.leg1(p), v = pairs.leg2(p);
    c[p] = h.then(u / k1, v / k1) * k1 + k.then(u % k1, v % k1);
  }
  GroupoidInC<C> g{std::move(graph), std::move(i), PointMap(std::move(c), arrs.leg1.domain_size()), std::move(s),
                   std::move(pairs)};
  return ProductGroupoid<C>{std::move(g), GroupoidFunctor{arrs.leg1, objs.leg1},
                            GroupoidFunctor{arrs.leg2, objs.leg2}};
}

inline GroupoidFunctor pair_functors(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  return {pair_maps(f.f1, g.f1), pair_maps(f.f0, g.f0)};
}

inline GroupoidFunctor constant_functor(std::size_t n1, std::size_t n0, Point arrow, Point object,
                                        std::size_t m1, std::size_t m0) {
  return {PointMap::constant(n1, m1, arrow), PointMap::constant(n0, m0, object)};
}

// ---------------------------------------------------------------------------
// Groupoids in finite T0 spaces.

using TopGroupoid = GroupoidInC<FinTop>;

// Two discrete objects, one arrow per ordered pair (lexicographic).
TopGroupoid interval_groupoid();
TopGroupoid terminal_groupoid();
// The indiscrete groupoid on n discrete objects.
TopGroupoid indiscrete_groupoid(std::size_t n);
TopGroupoid groupoid_of(const Equilogical& e);

// The functor H x I -> G restricting to f at 0 and fp at 1, if any.
std::optional<GroupoidFunctor> find_cylinder_homotopy(const TopGroupoid& h, const ProductGroupoid<FinTop>& cylinder,
                                                      const TopGroupoid& g, const GroupoidFunctor& f,
                                                      const GroupoidFunctor& fp, std::size_t cap = kDefaultCap);
std::optional<GroupoidFunctor> find_cylinder_homotopy(const TopGroupoid& h, const TopGroupoid& g,
                                                      const GroupoidFunctor& f, const GroupoidFunctor& fp,
                                                      std::size_t cap = kDefaultCap);

// Inclusion at an end of the interval: H -> H x I.
GroupoidFunctor cylinder_end(const TopGroupoid& h, Point end);

// ---------------------------------------------------------------------------
// The interval-object contract, generic over a model M providing
//   Object, Morphism, Key
//   compose(a, b, c, g, f) -> g.f        identity(a)
//   equal(a, b, f, g)                    key(a, b, f) -> Key
//   hom(a, b, cap) -> vector<Morphism>   product(a, b) -> Object
//   times(x, a, b, f) -> id_X x f : X x a -> X x b
//   show(f) -> string

template <class M>
struct IntervalObjectData {
  typename M::Object terminal;
  typename M::Object interval;
  typename M::Object pushout;
  typename M::Morphism e0, e1;    // T -> I
  typename M::Morphism in0, in1;  // I -> I +_T I, the legs 0' and 1'
  typename M::Morphism gamma;     // I -> I +_T I
  typename M::Morphism iota;      // I -> I
};

// Pushout of a <-f1- b -f2-> a2 with cocone q1, q2 into q, tested against
// maps into each test object. Returns a description of the first failure.
template <class M>
std::optional<std::string> check_pushout(const typename M::Object& b, const typename M::Object& a1,
                                         const typename M::Object& a2, const typename M::Object& q,
                                         const typename M::Morphism& f1, const typename M::Morphism& f2,
                                         const typename M::Morphism& q1, const typename M::Morphism& q2,
                                         const std::vector<typename M::Object>& tests, std::size_t cap) {
  if (!M::equal(b, q, M::compose(b, a1, q, q1, f1), M::compose(b, a2, q, q2, f2))) {
    return std::string("the pushout square does not commute");
  }
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const auto& y = tests[t];
    std::map<std::pair<typename M::Key, typename M::Key>, std::size_t> mediators;
    for (const auto& m : M::hom(q, y, cap)) {
      ++mediators[{M::key(a1, y, M::compose(a1, q, y, m, q1)), M::key(a2, y, M::compose(a2, q, y, m, q2))}];
    }
    auto to1 = M::hom(a1, y, cap);
    auto to2 = M::hom(a2, y, cap);
    for (const auto& u : to1) {
      auto uf = M::compose(b, a1, y, u, f1);
      for (const auto& v : to2) {
        if (!M::equal(b, y, uf, M::compose(b, a2, y, v, f2))) continue;
        auto it = mediators.find({M::key(a1, y, u), M::key(a2, y, v)});
        std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          return "test object " + std::to_string(t) + ": cocone (" + M::show(u) + ", " + M::show(v) + ") has " +
                 std::to_string(count) + " mediators";
        }
      }
    }
  }
  return std::nullopt;
}

template <class M>
Report verify_interval_structure(const IntervalObjectData<M>& d, const std::vector<typename M::Object>& samples,
                                 const std::vector<typename M::Object>& tests, std::size_t cap = kDefaultCap) {
  Report report;
  report.suite = "interval";
  const auto& T = d.terminal;
  const auto& I = d.interval;
  const auto& P = d.pushout;
  auto equation = [&](const std::string& name, const typename M::Object& src, const typename M::Object& tgt,
                      const typename M::Morphism& lhs, const typename M::Morphism& rhs) {
    CheckResult c{name};
    if (!M::equal(src, tgt, lhs, rhs)) c.fail(M::show(lhs) + " differs from " + M::show(rhs));
    report.checks.push_back(std::move(c));
  };
  equation("iota.e0 = e1", T, I, M::compose(T, I, I, d.iota, d.e0), d.e1);
  equation("iota.e1 = e0", T, I, M::compose(T, I, I, d.iota, d.e1), d.e0);
  equation("gamma.e0 = 0'.e0", T, P, M::compose(T, I, P, d.gamma, d.e0), M::compose(T, I, P, d.in0, d.e0));
  equation("gamma.e1 = 1'.e1", T, P, M::compose(T, I, P, d.gamma, d.e1), M::compose(T, I, P, d.in1, d.e1));
  equation("0'.e1 = 1'.e0", T, P, M::compose(T, I, P, d.in0, d.e1), M::compose(T, I, P, d.in1, d.e0));

  {
    CheckResult c{"terminal collapse !.e0 = !.e1 = id_T"};
    auto bang = M::hom(I, T, cap);
    if (bang.size() != 1) {
      c.fail("I has " + std::to_string(bang.size()) + " maps to T");
    } else {
      for (const auto* e : {&d.e0, &d.e1}) {
        if (!M::equal(T, T, M::compose(T, I, T, bang.front(), *e), M::identity(T))) c.fail("!.e is not id_T");
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"I +_T I is a pushout"};
    if (auto why = check_pushout<M>(T, I, I, P, d.e1, d.e0, d.in0, d.in1, tests, cap)) c.fail(*why);
    report.checks.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& X = samples[k];
    CheckResult c{"pushout stable under X x - for sample " + std::to_string(k)};
    auto XT = M::product(X, T), XI = M::product(X, I), XP = M::product(X, P);
    auto why = check_pushout<M>(XT, XI, XI, XP, M::times(X, T, I, d.e1), M::times(X, T, I, d.e0),
                                M::times(X, I, P, d.in0), M::times(X, I, P, d.in1), tests, cap);
    if (why) c.fail(*why);
    report.checks.push_back(std::move(c));
  }
  return report;
}

struct GroupoidModel {
  using Object = TopGroupoid;
  using Morphism = GroupoidFunctor;
  using Key = GroupoidFunctor;
  static Morphism compose(const Object&, const Object&, const Object&, const Morphism& g, const Morphism& f) {
    return compose_homs(g, f);
  }
  static Morphism identity(const Object& a) { return identity_hom(a.arrows(), a.objects()); }
  static bool equal(const Object&, const Object&, const Morphism& f, const Morphism& g) { return f == g; }
  static Key key(const Object&, const Object&, const Morphism& f) { return f; }
  static std::vector<Morphism> hom(const Object& a, const Object& b, std::size_t cap) {
    return enumerate_functors<FinTop>(a, b, cap);
  }
  static Object product(const Object& a, const Object& b) { return product_groupoid<FinTop>(a, b).groupoid; }
  static Morphism times(const Object& x, const Object& a, const Object& b, const Morphism& f);
  static std::string show(const Morphism& f) { return "(" + f.f1.to_string() + ", " + f.f0.to_string() + ")"; }
};

// The interval groupoid with its pushout, composite arrow and swap.
IntervalObjectData<GroupoidModel> groupoid_interval_data();

// ---------------------------------------------------------------------------
// Homotopy classes of functors against the maps of equilogical spaces.

struct SpanGroupoidFixture {
  std::string name;
  TopSpan span;
  TopGroupoid groupoid;
  Equilogical equ;
};

// Requires a subspatial equivalence span.
SpanGroupoidFixture make_span_fixture(std::string name, const TopSpan& span);

Report homotopy_quotient_equals_Equ(const std::vector<SpanGroupoidFixture>& fixtures,
                                    std::size_t cap = kDefaultCap);

}  // namespace eqlab
