#pragma once

// Finite concrete categories with canonical finite limits.
//
// Both ambient instances (finite T0 spaces, partitioned assemblies) are
// categories of finite sets with structure, where a morphism is a point
// function satisfying a pairwise admissibility condition. Everything here is
// written once against the ConcreteCategory concept and enumerated
// exhaustively at desk scale.

#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/error.hpp"
#include "eqlab/point_map.hpp"

namespace eqlab {

inline constexpr std::size_t kDefaultCap = 100000;

// admits_last(src, tgt, prefix) checks the newest assigned point
// (prefix.size() - 1) against every earlier one; a point function is a
// morphism iff every prefix passes. product_subset builds the subobject of the
// product carried by the listed pairs (lexicographic order), which is how
// pullbacks avoid materializing the full product.
template <class C>
concept ConcreteCategory =
    requires(const typename C::Object& a, const typename C::Object& b,
             std::span<const Point> prefix, const std::vector<Point>& subset,
             const std::vector<std::pair<Point, Point>>& pairs) {
      { C::size(a) } -> std::convertible_to<std::size_t>;
      { C::admits_last(a, b, prefix) } -> std::same_as<bool>;
      { C::product_subset(a, b, pairs) } -> std::same_as<typename C::Object>;
      { C::restrict(a, subset) } -> std::same_as<typename C::Object>;
      { C::terminal() } -> std::same_as<typename C::Object>;
      { C::name() } -> std::convertible_to<std::string>;
    };

template <ConcreteCategory C>
bool is_morphism(const typename C::Object& src, const typename C::Object& tgt, const PointMap& f) {
  if (f.domain_size() != C::size(src) || f.codomain_size() != C::size(tgt)) return false;
  auto values = f.values();
  for (std::size_t k = 1; k <= values.size(); ++k) {
    if (!C::admits_last(src, tgt, values.first(k))) return false;
  }
  return true;
}

// Per-point candidate lists restrict the search; an empty optional allows
// every target point. The visitor returns false to stop early. Throws
// CapExceeded once more than `cap` morphisms have been produced or the search
// tree grows beyond cap * (points + 1) nodes.
template <ConcreteCategory C, class Visitor>
std::size_t enumerate_maps(const typename C::Object& src, const typename C::Object& tgt,
                           const std::optional<std::vector<std::vector<Point>>>& candidates,
                           std::size_t cap, Visitor&& visit) {
  const std::size_t n = C::size(src);
  const std::size_t m = C::size(tgt);
  if (candidates && candidates->size() != n) {
    throw InvalidArgument("candidate lists do not cover the source carrier");
  }
  std::vector<Point> all;
  if (!candidates) {
    all.resize(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
  }
  const std::size_t node_limit = cap * (n + 1) + 1;
  std::size_t nodes = 0;
  std::size_t produced = 0;
  bool stop = false;
  std::vector<Point> prefix;
  prefix.reserve(n);

  auto recurse = [&](auto&& self) -> void {
    if (stop) return;
    if (++nodes > node_limit) {
      throw CapExceeded("cap", "search for morphisms " + std::string(C::name()) +
                                   " exceeded the node budget for cap " + std::to_string(cap));
    }
    const std::size_t k = prefix.size();
    if (k == n) {
      if (++produced > cap) {
        throw CapExceeded("cap", "hom-set in " + std::string(C::name()) + " exceeds cap " +
                                     std::to_string(cap));
      }
      if (!visit(PointMap(prefix, m))) stop = true;
      return;
    }
    const std::vector<Point>& options = candidates ? (*candidates)[k] : all;
    for (Point p : options) {
      prefix.push_back(p);
      if (C::admits_last(src, tgt, std::span<const Point>(prefix))) self(self);
      prefix.pop_back();
      if (stop) return;
    }
  };
  recurse(recurse);
  return produced;
}

template <ConcreteCategory C>
std::vector<PointMap> hom_set(const typename C::Object& src, const typename C::Object& tgt,
                              std::size_t cap = kDefaultCap) {
  std::vector<PointMap> out;
  enumerate_maps<C>(src, tgt, std::nullopt, cap, [&](const PointMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

template <ConcreteCategory C>
struct Cone {
  typename C::Object apex;
  PointMap leg1;
  PointMap leg2;
};

template <ConcreteCategory C>
Cone<C> product(const typename C::Object& a, const typename C::Object& b) {
  const std::size_t na = C::size(a), nb = C::size(b);
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<Point> p1, p2;
  pairs.reserve(na * nb);
  for (Point i = 0; i < na; ++i) {
    for (Point j = 0; j < nb; ++j) {
      pairs.emplace_back(i, j);
      p1.push_back(i);
      p2.push_back(j);
    }
  }
  return Cone<C>{C::product_subset(a, b, pairs), PointMap(std::move(p1), na),
                 PointMap(std::move(p2), nb)};
}

// Mediating map into the canonical product: w -> f(w) * |b| + g(w).
inline PointMap pair_maps(const PointMap& f, const PointMap& g) {
  if (f.domain_size() != g.domain_size()) throw InvalidArgument("pairing maps with different sources");
  std::vector<Point> image(f.domain_size());
  for (std::size_t w = 0; w < image.size(); ++w) image[w] = f(w) * g.codomain_size() + g(w);
  return PointMap(std::move(image), f.codomain_size() * g.codomain_size());
}

template <ConcreteCategory C>
struct EqualizerCone {
  typename C::Object apex;
  PointMap inclusion;
  std::vector<std::optional<Point>> index;  // source point -> apex point

  PointMap factorize(const PointMap& h) const {
    std::vector<Point> image(h.domain_size());
    for (std::size_t w = 0; w < image.size(); ++w) {
      if (!index[h(w)]) throw PreconditionViolation("map does not equalize the pair");
      image[w] = *index[h(w)];
    }
    return PointMap(std::move(image), inclusion.domain_size());
  }
};

template <ConcreteCategory C>
EqualizerCone<C> equalizer(const typename C::Object& src, const PointMap& f, const PointMap& g) {
  const std::size_t n = C::size(src);
  if (f.domain_size() != n || g.domain_size() != n || f.codomain_size() != g.codomain_size()) {
    throw InvalidArgument("equalizer of a non-parallel pair");
  }
  std::vector<Point> members;
  std::vector<std::optional<Point>> index(n);
  for (Point x = 0; x < n; ++x) {
    if (f(x) == g(x)) {
      index[x] = members.size();
      members.push_back(x);
    }
  }
  return EqualizerCone<C>{C::restrict(src, members), inclusion_of(members, n), std::move(index)};
}

template <ConcreteCategory C>
struct PullbackCone {
  typename C::Object apex;
  PointMap leg1;
  PointMap leg2;
  std::size_t right_size = 0;
  std::vector<std::optional<Point>> index;  // x * right_size + y -> apex point

  std::optional<Point> index_of(Point x, Point y) const { return index[x * right_size + y]; }

  PointMap factorize(const PointMap& p, const PointMap& q) const {
    std::vector<Point> image(p.domain_size());
    for (std::size_t w = 0; w < image.size(); ++w) {
      auto at = index_of(p(w), q(w));
      if (!at) throw PreconditionViolation("competitor cone does not commute");
      image[w] = *at;
    }
    return PointMap(std::move(image), leg1.domain_size());
  }
};

// Canonical pullback of X -f-> Z <-g- Y: the equalizer of f.pi1 and g.pi2 on
// the product, carried by the pairs (x, y) with f(x) = g(y) in lexicographic
// order.
template <ConcreteCategory C>
PullbackCone<C> pullback(const typename C::Object& x, const typename C::Object& y,
                         const PointMap& f, const PointMap& g) {
  const std::size_t nx = C::size(x), ny = C::size(y);
  if (f.domain_size() != nx || g.domain_size() != ny || f.codomain_size() != g.codomain_size()) {
    throw InvalidArgument("pullback of a non-cospan");
  }
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<Point> l1, l2;
  std::vector<std::optional<Point>> index(nx * ny);
  for (Point a = 0; a < nx; ++a) {
    for (Point b = 0; b < ny; ++b) {
      if (f(a) == g(b)) {
        index[a * ny + b] = pairs.size();
        pairs.emplace_back(a, b);
        l1.push_back(a);
        l2.push_back(b);
      }
    }
  }
  return PullbackCone<C>{C::product_subset(x, y, pairs), PointMap(std::move(l1), nx),
                         PointMap(std::move(l2), ny), ny, std::move(index)};
}

// A parallel pair d1, d2 : A1 -> A0.
struct MorphismPair {
  PointMap d1;
  PointMap d2;
};

// Pointwise form: the tupled function <d1, d2> is injective.
inline bool is_jointly_monic(const MorphismPair& p) {
  if (p.d1.domain_size() != p.d2.domain_size() || p.d1.codomain_size() != p.d2.codomain_size()) {
    throw InvalidArgument("jointly-monic test on a non-parallel pair");
  }
  std::map<std::pair<Point, Point>, Point> seen;
  for (Point x = 0; x < p.d1.domain_size(); ++x) {
    if (!seen.emplace(std::make_pair(p.d1(x), p.d2(x)), x).second) return false;
  }
  return true;
}

// Categorical form: for every probe W and every u, v : W -> A1, equal
// composites with both legs force u = v.
template <ConcreteCategory C>
bool is_jointly_monic_by_probes(const typename C::Object& a1, const MorphismPair& p,
                                const std::vector<typename C::Object>& probes,
                                std::size_t cap = kDefaultCap) {
  for (const auto& w : probes) {
    std::map<std::pair<PointMap, PointMap>, PointMap> seen;
    bool ok = true;
    enumerate_maps<C>(w, a1, std::nullopt, cap, [&](const PointMap& u) {
      auto key = std::make_pair(compose(p.d1, u), compose(p.d2, u));
      auto [it, inserted] = seen.emplace(std::move(key), u);
      if (!inserted && !(it->second == u)) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

struct UniversalCheck {
  bool holds = true;
  std::size_t competitors = 0;
  std::string failure;
};

template <ConcreteCategory C>
UniversalCheck check_product_universal(const typename C::Object& a, const typename C::Object& b,
                                       const Cone<C>& cone,
                                       const std::vector<typename C::Object>& tests,
                                       std::size_t cap = kDefaultCap) {
  UniversalCheck out;
  for (std::size_t t = 0; t < tests.size() && out.holds; ++t) {
    const auto& w = tests[t];
    std::map<std::pair<PointMap, PointMap>, std::size_t> mediators;
    for (const auto& m : hom_set<C>(w, cone.apex, cap)) {
      ++mediators[{compose(cone.leg1, m), compose(cone.leg2, m)}];
    }
    auto to_a = hom_set<C>(w, a, cap);
    auto to_b = hom_set<C>(w, b, cap);
    for (const auto& f : to_a) {
      for (const auto& g : to_b) {
        ++out.competitors;
        auto it = mediators.find({f, g});
        std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          out.holds = false;
          out.failure = "test object " + std::to_string(t) + ": competitor (" + f.to_string() +
                        ", " + g.to_string() + ") has " + std::to_string(count) + " mediators";
          return out;
        }
      }
    }
  }
  return out;
}

template <ConcreteCategory C>
UniversalCheck check_equalizer_universal(const typename C::Object& src, const PointMap& f,
                                         const PointMap& g, const EqualizerCone<C>& cone,
                                         const std::vector<typename C::Object>& tests,
                                         std::size_t cap = kDefaultCap) {
  UniversalCheck out;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const auto& w = tests[t];
    std::map<PointMap, std::size_t> mediators;
    for (const auto& m : hom_set<C>(w, cone.apex, cap)) ++mediators[compose(cone.inclusion, m)];
    for (const auto& h : hom_set<C>(w, src, cap)) {
      if (!(compose(f, h) == compose(g, h))) continue;
      ++out.competitors;
      auto it = mediators.find(h);
      std::size_t count = it == mediators.end() ? 0 : it->second;
      if (count != 1) {
        out.holds = false;
        out.failure = "test object " + std::to_string(t) + ": competitor " + h.to_string() +
                      " has " + std::to_string(count) + " mediators";
        return out;
      }
    }
  }
  return out;
}

template <ConcreteCategory C>
UniversalCheck check_pullback_universal(const typename C::Object& x, const typename C::Object& y,
                                        const PointMap& f, const PointMap& g,
                                        const PullbackCone<C>& cone,
                                        const std::vector<typename C::Object>& tests,
                                        std::size_t cap = kDefaultCap) {
  UniversalCheck out;
  if (!(compose(f, cone.leg1) == compose(g, cone.leg2))) {
    out.holds = false;
    out.failure = "pullback square does not commute";
    return out;
  }
  for (std::size_t t = 0; t < tests.size(); ++t) {
    const auto& w = tests[t];
    std::map<std::pair<PointMap, PointMap>, std::size_t> mediators;
    for (const auto& m : hom_set<C>(w, cone.apex, cap)) {
      ++mediators[{compose(cone.leg1, m), compose(cone.leg2, m)}];
    }
    auto to_x = hom_set<C>(w, x, cap);
    auto to_y = hom_set<C>(w, y, cap);
    for (const auto& p : to_x) {
      auto fp = compose(f, p);
      for (const auto& q : to_y) {
        if (!(fp == compose(g, q))) continue;
        ++out.competitors;
        auto it = mediators.find({p, q});
        std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          out.holds = false;
          out.failure = "test object " + std::to_string(t) + ": competitor (" + p.to_string() +
                        ", " + q.to_string() + ") has " + std::to_string(count) + " mediators";
          return out;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit finite categories, for law audits.

struct FiniteCategory {
  struct Arrow {
    std::size_t source;
    std::size_t target;
    std::string label;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> identity;                                 // per object
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;  // (g, f) -> g.f
};

struct LawViolation {
  std::string law;
  std::vector<std::size_t> arrows;
  std::string detail;
};

std::vector<LawViolation> audit_category_laws(const FiniteCategory& cat);

// Enumerates every hom-set among `objects` into an explicit composition table.
template <ConcreteCategory C>
FiniteCategory materialize(const std::vector<typename C::Object>& objects,
                           const std::vector<std::string>& names, std::size_t cap = kDefaultCap) {
  FiniteCategory cat;
  cat.objects = names;
  cat.identity.resize(objects.size());
  std::map<std::tuple<std::size_t, std::size_t, PointMap>, std::size_t> lookup;
  std::vector<PointMap> carriers;
  for (std::size_t a = 0; a < objects.size(); ++a) {
    for (std::size_t b = 0; b < objects.size(); ++b) {
      for (auto& f : hom_set<C>(objects[a], objects[b], cap)) {
        std::size_t id = cat.arrows.size();
        cat.arrows.push_back({a, b, names[a] + "->" + names[b] + f.to_string()});
        lookup.emplace(std::make_tuple(a, b, f), id);
        carriers.push_back(std::move(f));
        if (cap < cat.arrows.size()) {
          throw CapExceeded("cap", "materialized category exceeds cap " + std::to_string(cap));
        }
      }
    }
    cat.identity[a] = lookup.at({a, a, PointMap::identity(C::size(objects[a]))});
  }
  for (std::size_t f = 0; f < cat.arrows.size(); ++f) {
    for (std::size_t g = 0; g < cat.arrows.size(); ++g) {
      if (cat.arrows[f].target != cat.arrows[g].source) continue;
      auto it = lookup.find({cat.arrows[f].source, cat.arrows[g].target,
                             eqlab::compose(carriers[g], carriers[f])});
      if (it == lookup.end()) {
        throw InternalInvariant("composite of morphisms is not a morphism");
      }
      cat.compose[{g, f}] = it->second;
    }
  }
  return cat;
}

}  // namespace eqlab
