#include "eqlab/spans.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eqlab/error.hpp"

namespace eqlab {

bool is_subspatial(const TopSpan& e) {
  const auto& g = e.graph;
  auto prod = product_space(g.a0, g.a0);
  return is_subspace_inclusion({g.a1, prod.space, pair_maps(g.d1, g.d2)});
}

Equilogical functor_F(const TopSpan& e) {
  if (!is_subspatial(e)) throw PreconditionViolation("functor_F needs a subspatial equivalence span");
  if (!is_equivalence_span(e)) throw PreconditionViolation("functor_F needs an equivalence span");
  const auto& g = e.graph;
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < g.a1.size(); ++a) pairs.emplace_back(g.d1(a), g.d2(a));
  return Equilogical::make(g.a0, EquivalenceRelation::from_pairs(g.a0.size(), pairs));
}

EquMap functor_F_mor(const TopSpan& a, const TopSpan& b, const GraphHom& h) {
  if (!is_graph_hom<FinTop>(a.graph, b.graph, h)) {
    throw PreconditionViolation("functor_F_mor needs a homomorphism of spans");
  }
  return make_equ_map(functor_F(a), functor_F(b), h.f0);
}

TopSpan functor_G(const Equilogical& e) {
  const std::size_t n = e.size();
  auto pairs = e.rel.pairs();
  std::map<std::pair<Point, Point>, Point> index;
  std::vector<Point> members;
  for (Point i = 0; i < pairs.size(); ++i) {
    index[pairs[i]] = i;
    members.push_back(pairs[i].first * n + pairs[i].second);
  }
  auto prod = product_space(e.space, e.space);
  auto sub = subspace(prod.space, members);
  Graph<FinTop> g{sub.space, e.space, compose(prod.proj1, sub.inclusion),
                  compose(prod.proj2, sub.inclusion)};
  std::vector<Point> r(n), s(pairs.size());
  for (Point x = 0; x < n; ++x) r[x] = index.at({x, x});
  for (Point i = 0; i < pairs.size(); ++i) s[i] = index.at({pairs[i].second, pairs[i].first});
  auto pb = composable_pairs(g);
  std::vector<Point> t(pb.apex.size());
  for (Point p = 0; p < t.size(); ++p) {
    t[p] = index.at({pairs[pb.leg1(p)].first, pairs[pb.leg2(p)].second});
  }
  return TopSpan{std::move(g), PointMap(std::move(r), pairs.size()), PointMap(std::move(s), pairs.size()),
                 PointMap(std::move(t), pairs.size())};
}

std::optional<PointMap> forced_arc_map(const TopSpan& a, const TopSpan& b, const PointMap& f0) {
  std::map<std::pair<Point, Point>, Point> index;
  for (Point y = 0; y < b.graph.a1.size(); ++y) index[{b.graph.d1(y), b.graph.d2(y)}] = y;
  std::vector<Point> f1(a.graph.a1.size());
  for (Point x = 0; x < f1.size(); ++x) {
    auto it = index.find({f0(a.graph.d1(x)), f0(a.graph.d2(x))});
    if (it == index.end()) return std::nullopt;
    f1[x] = it->second;
  }
  return PointMap(std::move(f1), b.graph.a1.size());
}

Report equ_equivalence_check(const std::vector<NamedTopSpan>& spans, std::size_t cap) {
  Report report;
  report.suite = "equ-equivalence";
  CheckResult objects{"F.G is the identity on objects"};
  CheckResult valid{"fixtures are subspatial equivalence spans"};
  std::vector<Equilogical> images;
  for (const auto& s : spans) {
    for (const auto& why : check_equivalence_span(s.span)) valid.fail(s.name + ": " + why);
    if (!is_subspatial(s.span)) valid.fail(s.name + ": not subspatial");
    if (!valid.passed) continue;
    images.push_back(functor_F(s.span));
    if (functor_F(functor_G(images.back())) != images.back()) objects.fail(s.name + ": F(G(F S)) differs from F S");
  }
  report.checks.push_back(std::move(valid));
  report.checks.push_back(std::move(objects));
  if (!report.passed()) return report;

  CheckResult bijection{"F is a bijection from identification classes to Equ maps"};
  for (std::size_t x = 0; x < spans.size(); ++x) {
    for (std::size_t y = 0; y < spans.size(); ++y) {
      const auto& a = spans[x].span;
      const auto& b = spans[y].span;
      const std::string pair_name = spans[x].name + " -> " + spans[y].name;
      auto homs = enumerate_graph_homs<FinTop>(a.graph, b.graph, cap);
      auto cls = identification_classes<FinTop>(a.graph, b.graph, homs, cap);
      const std::size_t classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
      // Well defined on classes and injective on them.
      std::vector<std::optional<EquMap>> per_class(classes);
      std::set<EquMap> images_seen;
      for (std::size_t i = 0; i < homs.size(); ++i) {
        auto m = functor_F_mor(a, b, homs[i]);
        if (per_class[cls[i]] && *per_class[cls[i]] != m) bijection.fail(pair_name + ": F is not constant on a class");
        per_class[cls[i]] = m;
        images_seen.insert(m);
      }
      if (images_seen.size() != classes) bijection.fail(pair_name + ": two classes share an image");
      // Surjective: every Equ map has a homomorphism over it.
      auto equ = equ_hom_set(images[x], images[y], cap);
      for (const auto& c : equ) {
        if (!images_seen.count(c.map)) {
          bijection.fail(pair_name + ": Equ map " + c.map.representative().to_string() + " is not hit");
        }
      }
      bijection.note(pair_name + ": " + std::to_string(homs.size()) + " homomorphisms, " + std::to_string(classes) +
                     " classes, " + std::to_string(equ.size()) + " Equ maps");
    }
  }
  report.checks.push_back(std::move(bijection));
  return report;
}

}  // namespace eqlab
