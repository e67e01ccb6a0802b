#include "eqlab/groupoid.hpp"

#include <sstream>

namespace eqlab {

TopGroupoid groupoid_of(const Equilogical& e) { return groupoid_from_jointly_monic(functor_G(e)); }

TopGroupoid indiscrete_groupoid(std::size_t n) {
  return groupoid_of(Equilogical::make(FinSpace::discrete(n), EquivalenceRelation::total(n)));
}

TopGroupoid interval_groupoid() { return indiscrete_groupoid(2); }
TopGroupoid terminal_groupoid() { return indiscrete_groupoid(1); }

GroupoidFunctor cylinder_end(const TopGroupoid& h, Point end) {
  if (end > 1) throw InvalidArgument("the interval has two ends");
  std::vector<Point> f1(h.arrows()), f0(h.objects());
  // Interval arrows are the pairs (0,0), (0,1), (1,0), (1,1).
  const Point loop = end == 0 ? 0 : 3;
  for (Point a = 0; a < f1.size(); ++a) f1[a] = a * 4 + loop;
  for (Point x = 0; x < f0.size(); ++x) f0[x] = x * 2 + end;
  return {PointMap(std::move(f1), h.arrows() * 4), PointMap(std::move(f0), h.objects() * 2)};
}

std::optional<GroupoidFunctor> find_cylinder_homotopy(const TopGroupoid& h, const ProductGroupoid<FinTop>& cylinder,
                                                      const TopGroupoid& g, const GroupoidFunctor& f,
                                                      const GroupoidFunctor& fp, std::size_t cap) {
  const auto& hi = cylinder.groupoid;
  std::vector<Point> k0(hi.objects());
  for (Point x = 0; x < h.objects(); ++x) {
    k0[2 * x] = f.f0(x);
    k0[2 * x + 1] = fp.f0(x);
  }
  PointMap K0(std::move(k0), g.objects());
  if (!is_morphism<FinTop>(hi.graph.a0, g.graph.a0, K0)) return std::nullopt;
  std::vector<std::vector<Point>> candidates(hi.arrows());
  for (Point p = 0; p < hi.arrows(); ++p) {
    Point a = p / 4, v = p % 4;
    if (v == 0) {
      candidates[p] = {f.f1(a)};
    } else if (v == 3) {
      candidates[p] = {fp.f1(a)};
    } else {
      for (Point b = 0; b < g.arrows(); ++b) {
        if (g.source(b) == K0(hi.source(p)) && g.target(b) == K0(hi.target(p))) candidates[p].push_back(b);
      }
    }
    if (candidates[p].empty()) return std::nullopt;
  }
  std::optional<GroupoidFunctor> found;
  enumerate_maps<FinTop>(hi.graph.a1, g.graph.a1, candidates, cap, [&](const PointMap& k1) {
    GroupoidFunctor k{k1, K0};
    if (!is_functor(hi, g, k)) return true;
    if (!(compose_homs(k, cylinder_end(h, 0)) == f) || !(compose_homs(k, cylinder_end(h, 1)) == fp)) {
      throw InternalInvariant("cylinder homotopy does not restrict to its ends");
    }
    found = k;
    return false;
  });
  return found;
}

std::optional<GroupoidFunctor> find_cylinder_homotopy(const TopGroupoid& h, const TopGroupoid& g,
                                                      const GroupoidFunctor& f, const GroupoidFunctor& fp,
                                                      std::size_t cap) {
  return find_cylinder_homotopy(h, product_groupoid<FinTop>(h, interval_groupoid()), g, f, fp, cap);
}

GroupoidModel::Morphism GroupoidModel::times(const Object& x, const Object& a, const Object& b, const Morphism& f) {
  std::vector<Point> f1(x.arrows() * a.arrows()), f0(x.objects() * a.objects());
  for (Point u = 0; u < f1.size(); ++u) f1[u] = (u / a.arrows()) * b.arrows() + f.f1(u % a.arrows());
  for (Point u = 0; u < f0.size(); ++u) f0[u] = (u / a.objects()) * b.objects() + f.f0(u % a.objects());
  return {PointMap(std::move(f1), x.arrows() * b.arrows()), PointMap(std::move(f0), x.objects() * b.objects())};
}

IntervalObjectData<GroupoidModel> groupoid_interval_data() {
  auto T = terminal_groupoid();
  auto I = interval_groupoid();
  auto P = indiscrete_groupoid(3);
  auto functor = [](const TopGroupoid& h, const TopGroupoid& g, std::vector<Point> f0) {
    auto f = forced_functor(h, g, PointMap(std::move(f0), g.objects()));
    if (!f) throw InternalInvariant("interval structure map is not a functor");
    return *f;
  };
  IntervalObjectData<GroupoidModel> d{T, I, P, {}, {}, {}, {}, {}, {}};
  d.e0 = functor(T, I, {0});
  d.e1 = functor(T, I, {1});
  d.in0 = functor(I, P, {0, 1});
  d.in1 = functor(I, P, {1, 2});
  d.gamma = functor(I, P, {0, 2});
  d.iota = functor(I, I, {1, 0});
  return d;
}

SpanGroupoidFixture make_span_fixture(std::string name, const TopSpan& span) {
  if (!is_subspatial(span)) throw PreconditionViolation("fixture " + name + " is not a subspatial span");
  return SpanGroupoidFixture{std::move(name), span, groupoid_from_jointly_monic(span), functor_F(span)};
}

namespace {

std::string show_functor(const GroupoidFunctor& f) { return "f0=" + f.f0.to_string() + " f1=" + f.f1.to_string(); }

}  // namespace

Report homotopy_quotient_equals_Equ(const std::vector<SpanGroupoidFixture>& fixtures, std::size_t cap) {
  Report report;
  report.suite = "homotopy-quotient";
  const std::size_t n = fixtures.size();

  CheckResult groupoids{"subspatial spans are groupoids"};
  for (const auto& fx : fixtures) {
    for (const auto& why : check_groupoid(fx.groupoid)) groupoids.fail(fx.name + ": " + why);
  }

  CheckResult representatives{"span homomorphisms are functors"};
  std::vector<std::vector<std::vector<GroupoidFunctor>>> functors(n, std::vector<std::vector<GroupoidFunctor>>(n));
  std::size_t functor_count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& X = fixtures[x];
      const auto& Y = fixtures[y];
      for (const auto& h : enumerate_graph_homs<FinTop>(X.groupoid.graph, Y.groupoid.graph, cap)) {
        try {
          functors[x][y].push_back(graph_hom_is_functor(X.groupoid, Y.groupoid, h));
        } catch (const InternalInvariant& e) {
          representatives.fail(X.name + " -> " + Y.name + ": " + e.what());
        }
      }
      functor_count += functors[x][y].size();
    }
  }
  representatives.note(std::to_string(functor_count) + " functors over " + std::to_string(n * n) + " ordered pairs");

  CheckResult agreement{"homotopy = identification = Equ equivalence"};
  CheckResult relation{"homotopy is an equivalence relation"};
  CheckResult quotient{"homotopy classes biject with Equ maps"};
  // homotopic[x][y][i][j]
  std::vector<std::vector<std::vector<std::vector<char>>>> homotopic(n, std::vector<std::vector<std::vector<char>>>(n));
  std::size_t compared = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& X = fixtures[x];
    auto cylinder = product_groupoid<FinTop>(X.groupoid, interval_groupoid());
    for (std::size_t y = 0; y < n; ++y) {
      const auto& Y = fixtures[y];
      const auto& fs = functors[x][y];
      auto& rel = homotopic[x][y];
      rel.assign(fs.size(), std::vector<char>(fs.size(), 0));
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = 0; j < fs.size(); ++j) {
          ++compared;
          bool nat = homotopic_functors(X.groupoid, Y.groupoid, fs[i], fs[j], cap).has_value();
          bool cyl = find_cylinder_homotopy(X.groupoid, cylinder, Y.groupoid, fs[i], fs[j], cap).has_value();
          bool ident = homs_identified<FinTop>(X.groupoid.graph, Y.groupoid.graph, fs[i], fs[j], cap).has_value();
          bool equ = maps_equivalent(X.equ, Y.equ, fs[i].f0, fs[j].f0);
          rel[i][j] = nat;
          if (nat != cyl || nat != ident || nat != equ) {
            std::ostringstream why;
            why << X.name << " -> " << Y.name << ": F " << show_functor(fs[i]) << ", F' " << show_functor(fs[j])
                << ": transformation " << nat << ", cylinder " << cyl << ", identified " << ident << ", Equ " << equ;
            agreement.fail(why.str());
          }
        }
      }
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!rel[i][i]) relation.fail(X.name + " -> " + Y.name + ": not reflexive at " + show_functor(fs[i]));
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (rel[i][j] != rel[j][i]) relation.fail(X.name + " -> " + Y.name + ": not symmetric");
          if (!rel[i][j]) continue;
          for (std::size_t k = 0; k < fs.size(); ++k) {
            if (rel[j][k] && !rel[i][k]) relation.fail(X.name + " -> " + Y.name + ": not transitive");
          }
        }
      }
      // Classes, in order of first appearance, against Equ maps.
      std::vector<EquMap> class_maps;
      std::vector<std::size_t> leaders;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        bool seen = false;
        for (std::size_t l : leaders) seen = seen || rel[l][i];
        if (seen) continue;
        leaders.push_back(i);
        class_maps.push_back(make_equ_map(X.equ, Y.equ, fs[i].f0, cap));
      }
      auto equ_maps = equ_hom_set(X.equ, Y.equ, cap);
      std::sort(class_maps.begin(), class_maps.end());
      bool same = class_maps.size() == equ_maps.size();
      for (std::size_t k = 0; same && k < class_maps.size(); ++k) same = class_maps[k] == equ_maps[k].map;
      if (!same) {
        quotient.fail(X.name + " -> " + Y.name + ": " + std::to_string(leaders.size()) + " homotopy classes, " +
                      std::to_string(equ_maps.size()) + " Equ maps");
      }
    }
  }
  agreement.note(std::to_string(compared) + " ordered functor pairs compared");

  CheckResult composition{"homotopy respects composition"};
  std::size_t composites = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& X = fixtures[x].groupoid;
        const auto& Z = fixtures[z].groupoid;
        const auto& xy = functors[x][y];
        const auto& yz = functors[y][z];
        // F ~ F' : X -> Y gives G.F ~ G.F'; F ~ F' : Y -> Z gives F.P ~ F'.P.
        for (std::size_t i = 0; i < xy.size(); ++i) {
          for (std::size_t j = i + 1; j < xy.size(); ++j) {
            if (!homotopic[x][y][i][j]) continue;
            for (const auto& g : yz) {
              ++composites;
              if (!homotopic_functors(X, Z, compose_homs(g, xy[i]), compose_homs(g, xy[j]), cap)) {
                composition.fail(fixtures[x].name + " -> " + fixtures[y].name + " -> " + fixtures[z].name +
                                 ": post-composition breaks a homotopy");
              }
            }
          }
        }
        for (std::size_t i = 0; i < yz.size(); ++i) {
          for (std::size_t j = i + 1; j < yz.size(); ++j) {
            if (!homotopic[y][z][i][j]) continue;
            for (const auto& p : xy) {
              ++composites;
              if (!homotopic_functors(X, Z, compose_homs(yz[i], p), compose_homs(yz[j], p), cap)) {
                composition.fail(fixtures[x].name + " -> " + fixtures[y].name + " -> " + fixtures[z].name +
                                 ": pre-composition breaks a homotopy");
              }
            }
          }
        }
      }
    }
  }
  composition.note(std::to_string(composites) + " composites checked");

  for (auto* c : {&groupoids, &representatives, &agreement, &relation, &quotient, &composition}) {
    report.checks.push_back(std::move(*c));
  }
  return report;
}

}  // namespace eqlab
