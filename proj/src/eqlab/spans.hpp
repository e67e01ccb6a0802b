#pragma once

// Graphs and equivalence spans in a finite concrete category, their
// homomorphisms, and the identification that defines the exact completion.

#include <optional>
#include <string>
#include <vector>

#include "eqlab/cat.hpp"
#include "eqlab/equ.hpp"
#include "eqlab/fintop.hpp"
#include "eqlab/report.hpp"

namespace eqlab {

template <ConcreteCategory C>
struct Graph {
  using Object = typename C::Object;
  Object a1;
  Object a0;
  PointMap d1;  // source
  PointMap d2;  // target

  MorphismPair legs() const { return {d1, d2}; }
};

// Consecutive arcs: pairs (a, b) with d2(a) = d1(b).
template <ConcreteCategory C>
PullbackCone<C> composable_pairs(const Graph<C>& g) {
  return pullback<C>(g.a1, g.a1, g.d2, g.d1);
}

template <ConcreteCategory C>
struct EquivalenceSpan {
  Graph<C> graph;
  PointMap r;  // A0 -> A1
  PointMap s;  // A1 -> A1
  PointMap t;  // composable_pairs(graph) -> A1
};

struct GraphHom {
  PointMap f1;
  PointMap f0;
  friend bool operator==(const GraphHom&, const GraphHom&) = default;
  friend auto operator<=>(const GraphHom&, const GraphHom&) = default;
};

template <ConcreteCategory C>
std::vector<std::string> check_graph(const Graph<C>& g) {
  std::vector<std::string> out;
  const std::size_t n1 = C::size(g.a1), n0 = C::size(g.a0);
  for (const auto* leg : {&g.d1, &g.d2}) {
    if (leg->domain_size() != n1 || leg->codomain_size() != n0) {
      out.push_back("leg has the wrong endpoints");
    } else if (!is_morphism<C>(g.a1, g.a0, *leg)) {
      out.push_back(std::string("leg is not a morphism of ") + C::name());
    }
  }
  return out;
}

// Lists every failed condition; an empty list means the candidate is an
// equivalence span.
template <ConcreteCategory C>
std::vector<std::string> check_equivalence_span(const EquivalenceSpan<C>& e) {
  auto out = check_graph(e.graph);
  if (!out.empty()) return out;
  const auto& g = e.graph;
  const std::size_t n1 = C::size(g.a1), n0 = C::size(g.a0);
  if (e.r.domain_size() != n0 || e.r.codomain_size() != n1) return {"r has the wrong endpoints"};
  if (e.s.domain_size() != n1 || e.s.codomain_size() != n1) return {"s has the wrong endpoints"};
  auto pb = composable_pairs(g);
  if (e.t.domain_size() != C::size(pb.apex) || e.t.codomain_size() != n1) {
    return {"t has the wrong endpoints"};
  }
  if (!is_morphism<C>(g.a0, g.a1, e.r)) out.push_back("r is not a morphism");
  if (!is_morphism<C>(g.a1, g.a1, e.s)) out.push_back("s is not a morphism");
  if (!is_morphism<C>(pb.apex, g.a1, e.t)) out.push_back("t is not a morphism");
  for (Point x = 0; x < n0; ++x) {
    if (g.d1(e.r(x)) != x || g.d2(e.r(x)) != x) {
      out.push_back("reflexivity fails at object " + std::to_string(x));
    }
  }
  for (Point a = 0; a < n1; ++a) {
    if (g.d1(e.s(a)) != g.d2(a) || g.d2(e.s(a)) != g.d1(a)) {
      out.push_back("symmetry fails at arc " + std::to_string(a));
    }
  }
  for (Point p = 0; p < C::size(pb.apex); ++p) {
    Point a = pb.leg1(p), b = pb.leg2(p);
    if (g.d1(e.t(p)) != g.d1(a) || g.d2(e.t(p)) != g.d2(b)) {
      out.push_back("compatibility fails at the consecutive pair (" + std::to_string(a) + ", " +
                    std::to_string(b) + ")");
    }
  }
  return out;
}

template <ConcreteCategory C>
bool is_equivalence_span(const EquivalenceSpan<C>& e) {
  return check_equivalence_span(e).empty();
}

template <ConcreteCategory C>
bool is_graph_hom(const Graph<C>& a, const Graph<C>& b, const GraphHom& h) {
  if (h.f1.domain_size() != C::size(a.a1) || h.f1.codomain_size() != C::size(b.a1) ||
      h.f0.domain_size() != C::size(a.a0) || h.f0.codomain_size() != C::size(b.a0)) {
    return false;
  }
  if (!is_morphism<C>(a.a1, b.a1, h.f1) || !is_morphism<C>(a.a0, b.a0, h.f0)) return false;
  return compose(b.d1, h.f1) == compose(h.f0, a.d1) && compose(b.d2, h.f1) == compose(h.f0, a.d2);
}

inline GraphHom compose_homs(const GraphHom& g, const GraphHom& f) {
  return {compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

inline GraphHom identity_hom(std::size_t n1, std::size_t n0) {
  return {PointMap::identity(n1), PointMap::identity(n0)};
}

// Every graph homomorphism a -> b: object parts from the hom-set, arc parts
// searched over the fibres the commuting squares allow.
template <ConcreteCategory C>
std::vector<GraphHom> enumerate_graph_homs(const Graph<C>& a, const Graph<C>& b,
                                           std::size_t cap = kDefaultCap) {
  std::vector<GraphHom> out;
  const std::size_t n1 = C::size(a.a1), m1 = C::size(b.a1);
  for (const auto& f0 : hom_set<C>(a.a0, b.a0, cap)) {
    std::vector<std::vector<Point>> fibres(n1);
    bool empty = false;
    for (Point x = 0; x < n1 && !empty; ++x) {
      for (Point y = 0; y < m1; ++y) {
        if (b.d1(y) == f0(a.d1(x)) && b.d2(y) == f0(a.d2(x))) fibres[x].push_back(y);
      }
      empty = fibres[x].empty();
    }
    if (empty) continue;
    enumerate_maps<C>(a.a1, b.a1, fibres, cap, [&](const PointMap& f1) {
      out.push_back({f1, f0});
      if (out.size() > cap) throw CapExceeded("cap", "graph hom-set exceeds cap");
      return true;
    });
  }
  return out;
}

// Search for h : A0 -> B1 with e1.h = f0 and e2.h = g0. Only the object parts
// of the two homomorphisms matter.
template <ConcreteCategory C>
std::optional<PointMap> homs_identified(const typename C::Object& a0, const Graph<C>& b,
                                        const PointMap& f0, const PointMap& g0,
                                        std::size_t cap = kDefaultCap) {
  const std::size_t n0 = C::size(a0), m1 = C::size(b.a1);
  if (f0.domain_size() != n0 || g0.domain_size() != n0) {
    throw InvalidArgument("homs_identified: object parts do not share the source");
  }
  std::vector<std::vector<Point>> fibres(n0);
  for (Point x = 0; x < n0; ++x) {
    for (Point y = 0; y < m1; ++y) {
      if (b.d1(y) == f0(x) && b.d2(y) == g0(x)) fibres[x].push_back(y);
    }
    if (fibres[x].empty()) return std::nullopt;
  }
  std::optional<PointMap> witness;
  enumerate_maps<C>(a0, b.a1, fibres, cap, [&](const PointMap& h) {
    witness = h;
    return false;
  });
  return witness;
}

template <ConcreteCategory C>
std::optional<PointMap> homs_identified(const Graph<C>& a, const Graph<C>& b, const GraphHom& h1,
                                        const GraphHom& h2, std::size_t cap = kDefaultCap) {
  return homs_identified<C>(a.a0, b, h1.f0, h2.f0, cap);
}

// Assigns each homomorphism the index of its identification class (classes
// numbered in order of first appearance).
template <ConcreteCategory C>
std::vector<std::size_t> identification_classes(const Graph<C>& a, const Graph<C>& b,
                                                const std::vector<GraphHom>& homs,
                                                std::size_t cap = kDefaultCap) {
  std::vector<std::size_t> cls(homs.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    bool found = false;
    for (std::size_t c = 0; c < reps.size() && !found; ++c) {
      if (homs_identified<C>(a, b, homs[reps[c]], homs[i], cap)) {
        cls[i] = c;
        found = true;
      }
    }
    if (!found) {
      cls[i] = reps.size();
      reps.push_back(i);
    }
  }
  return cls;
}

struct StructureSolutions {
  std::vector<PointMap> r;
  std::vector<PointMap> s;
  std::vector<PointMap> t;
};

// Every r, s, t making the graph an equivalence span, found by exhaustion.
template <ConcreteCategory C>
StructureSolutions solve_structure_maps(const Graph<C>& g, std::size_t cap = kDefaultCap) {
  StructureSolutions out;
  const std::size_t n1 = C::size(g.a1), n0 = C::size(g.a0);
  auto fibre = [&](Point from, Point to) {
    std::vector<Point> f;
    for (Point y = 0; y < n1; ++y) {
      if (g.d1(y) == from && g.d2(y) == to) f.push_back(y);
    }
    return f;
  };
  auto collect = [&](const typename C::Object& src, std::vector<std::vector<Point>> fibres,
                     std::vector<PointMap>& into) {
    for (const auto& f : fibres) {
      if (f.empty()) return;
    }
    enumerate_maps<C>(src, g.a1, fibres, cap, [&](const PointMap& m) {
      into.push_back(m);
      return true;
    });
  };
  std::vector<std::vector<Point>> rf(n0), sf(n1);
  for (Point x = 0; x < n0; ++x) rf[x] = fibre(x, x);
  for (Point a = 0; a < n1; ++a) sf[a] = fibre(g.d2(a), g.d1(a));
  auto pb = composable_pairs(g);
  std::vector<std::vector<Point>> tf(C::size(pb.apex));
  for (Point p = 0; p < tf.size(); ++p) tf[p] = fibre(g.d1(pb.leg1(p)), g.d2(pb.leg2(p)));
  collect(g.a0, rf, out.r);
  collect(g.a1, sf, out.s);
  collect(pb.apex, tf, out.t);
  return out;
}

// ---------------------------------------------------------------------------
// Spans of finite spaces and the comparison with equilogical spaces.

using TopSpan = EquivalenceSpan<FinTop>;

// <d1, d2> : A1 -> A0 x A0 is a subspace inclusion.
bool is_subspatial(const TopSpan& e);

// (A0, |A1| as a pair set). Requires a subspatial span.
Equilogical functor_F(const TopSpan& e);

// [f0].
EquMap functor_F_mor(const TopSpan& a, const TopSpan& b, const GraphHom& h);

// The relation with the subspace topology from the product, with the two
// projections and the unique structure maps.
TopSpan functor_G(const Equilogical& e);

// The forced arc component: (x, x') -> (f0 x, f0 x'), if it lands in B1.
std::optional<PointMap> forced_arc_map(const TopSpan& a, const TopSpan& b, const PointMap& f0);

struct NamedTopSpan {
  std::string name;
  TopSpan span;
};

// For every ordered pair: F sends identification classes of homomorphisms
// bijectively onto the Equ hom-set; and F.G is the identity on objects.
Report equ_equivalence_check(const std::vector<NamedTopSpan>& spans, std::size_t cap = kDefaultCap);

}  // namespace eqlab
