#include "eqlab/equ.hpp"

#include <algorithm>
#include <map>

#include "eqlab/error.hpp"

namespace eqlab {

EquivalenceRelation EquivalenceRelation::from_pairs(std::size_t n,
                                                    const std::vector<std::pair<Point, Point>>& pairs) {
  EquivalenceRelation r;
  r.n_ = n;
  r.rel_.assign(n * n, 0);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InvalidArgument("relation pair outside the carrier");
    r.rel_[x * n + y] = 1;
  }
  for (Point x = 0; x < n; ++x) {
    if (!r.related(x, x)) throw InvalidArgument("relation is not reflexive at " + std::to_string(x));
    for (Point y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      if (!r.related(y, x)) throw InvalidArgument("relation is not symmetric");
      for (Point z = 0; z < n; ++z) {
        if (r.related(y, z) && !r.related(x, z)) throw InvalidArgument("relation is not transitive");
      }
    }
  }
  return r;
}

EquivalenceRelation EquivalenceRelation::diagonal(std::size_t n) {
  std::vector<std::size_t> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = i;
  return from_blocks(blocks);
}

EquivalenceRelation EquivalenceRelation::total(std::size_t n) {
  return from_blocks(std::vector<std::size_t>(n, 0));
}

EquivalenceRelation EquivalenceRelation::from_blocks(const std::vector<std::size_t>& block_of) {
  EquivalenceRelation r;
  r.n_ = block_of.size();
  r.rel_.assign(r.n_ * r.n_, 0);
  for (Point x = 0; x < r.n_; ++x) {
    for (Point y = 0; y < r.n_; ++y) r.rel_[x * r.n_ + y] = block_of[x] == block_of[y];
  }
  return r;
}

std::vector<std::pair<Point, Point>> EquivalenceRelation::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < n_; ++x) {
    for (Point y = 0; y < n_; ++y) {
      if (related(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Point> EquivalenceRelation::class_of(Point x) const {
  std::vector<Point> out;
  for (Point y = 0; y < n_; ++y) {
    if (related(x, y)) out.push_back(y);
  }
  return out;
}

Equilogical Equilogical::make(FinSpace space, EquivalenceRelation rel) {
  if (!is_T0(space)) throw InvalidArgument("equilogical space over a non-T0 space");
  if (rel.size() != space.size()) throw InvalidArgument("relation and space have different carriers");
  return Equilogical{std::move(space), std::move(rel)};
}

bool EquReps::admits_last(const Equilogical& src, const Equilogical& tgt, std::span<const Point> prefix) {
  if (!FinTop::admits_last(src.space, tgt.space, prefix)) return false;
  const Point p = prefix.size() - 1;
  for (Point j = 0; j <= p; ++j) {
    if (src.rel.related(j, p) && !tgt.rel.related(prefix[j], prefix[p])) return false;
  }
  return true;
}

Equilogical EquReps::product_subset(const Equilogical& a, const Equilogical& b,
                                    const std::vector<std::pair<Point, Point>>& pairs) {
  const std::size_t k = pairs.size();
  std::vector<std::pair<Point, Point>> rel;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (a.rel.related(pairs[i].first, pairs[j].first) && b.rel.related(pairs[i].second, pairs[j].second)) {
        rel.emplace_back(i, j);
      }
    }
  }
  return Equilogical{FinTop::product_subset(a.space, b.space, pairs),
                     EquivalenceRelation::from_pairs(k, rel)};
}

Equilogical EquReps::restrict(const Equilogical& e, const std::vector<Point>& subset) {
  std::vector<std::pair<Point, Point>> rel;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (e.rel.related(subset[i], subset[j])) rel.emplace_back(i, j);
    }
  }
  return Equilogical{subspace(e.space, subset).space, EquivalenceRelation::from_pairs(subset.size(), rel)};
}

bool is_equ_map_rep(const Equilogical& e, const Equilogical& f, const PointMap& fn) {
  return is_morphism<EquReps>(e, f, fn);
}

bool maps_equivalent(const Equilogical& e, const Equilogical& f, const PointMap& a, const PointMap& b) {
  if (a.domain_size() != e.size() || b.domain_size() != e.size() || a.codomain_size() != f.size() ||
      b.codomain_size() != f.size()) {
    throw InvalidArgument("maps_equivalent: source or target mismatch");
  }
  for (Point x = 0; x < e.size(); ++x) {
    if (!f.rel.related(a(x), b(x))) return false;
  }
  return true;
}

std::vector<PointMap> equ_class_members(const Equilogical& e, const Equilogical& f, const PointMap& fn,
                                        std::size_t cap) {
  if (!is_equ_map_rep(e, f, fn)) throw InvalidArgument("not a map of equilogical spaces");
  std::vector<std::vector<Point>> candidates(e.size());
  for (Point x = 0; x < e.size(); ++x) candidates[x] = f.rel.class_of(fn(x));
  std::vector<PointMap> out;
  enumerate_maps<EquReps>(e, f, candidates, cap, [&](const PointMap& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

EquMap make_equ_map(const Equilogical& e, const Equilogical& f, const PointMap& fn, std::size_t cap) {
  auto members = equ_class_members(e, f, fn, cap);
  // Enumeration runs in lexicographic order, so the first member is least.
  return EquMap(members.front());
}

EquMap identity_equ_map(const Equilogical& e) {
  return make_equ_map(e, e, PointMap::identity(e.size()));
}

EquMap compose(const Equilogical& e, const Equilogical& f, const Equilogical& g, const EquMap& gmap,
               const EquMap& fmap) {
  if (fmap.representative().domain_size() != e.size() || fmap.representative().codomain_size() != f.size() ||
      gmap.representative().domain_size() != f.size() || gmap.representative().codomain_size() != g.size()) {
    throw InvalidArgument("composing equilogical maps that are not composable");
  }
  return make_equ_map(e, g, eqlab::compose(gmap.representative(), fmap.representative()));
}

EquProduct product_equ(const Equilogical& e, const Equilogical& f) {
  auto cone = product<EquReps>(e, f);
  EquMap p1 = make_equ_map(cone.apex, e, cone.leg1);
  EquMap p2 = make_equ_map(cone.apex, f, cone.leg2);
  return {std::move(cone.apex), std::move(p1), std::move(p2)};
}

Equilogical embed_T0(const FinSpace& s) {
  if (!is_T0(s)) throw InvalidArgument("embedding a non-T0 space");
  return Equilogical{s, EquivalenceRelation::diagonal(s.size())};
}

std::vector<EquHomClass> equ_hom_set(const Equilogical& e, const Equilogical& f, std::size_t cap) {
  std::vector<EquHomClass> classes;
  enumerate_maps<EquReps>(e, f, std::nullopt, cap, [&](const PointMap& g) {
    for (auto& c : classes) {
      if (maps_equivalent(e, f, c.members.front(), g)) {
        c.members.push_back(g);
        return true;
      }
    }
    // Lexicographic enumeration: the first member seen is the least.
    classes.push_back({make_equ_map(e, f, g, cap), {g}});
    return true;
  });
  std::sort(classes.begin(), classes.end(),
            [](const EquHomClass& a, const EquHomClass& b) { return a.map < b.map; });
  return classes;
}

}  // namespace eqlab
