#include "eqlab/twogroupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "eqlab/error.hpp"

namespace eqlab {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

Zigzag single_step(const NumericBase& b, std::size_t e) {
  const auto& edge = b.edges.at(e);
  return {edge.src, edge.tgt, {{e, 0}}};
}

// Realizer-consistency of a partial assignment code -> code.
template <class Key>
bool consistent_insert(std::map<Key, Nat>& seen, const Key& key, const Nat& value) {
  auto [it, fresh] = seen.emplace(key, value);
  return fresh || it->second == value;
}

using EdgeKey = std::tuple<Nat, Nat, Nat>;

EdgeKey edge_key(const NumericBase& b, std::size_t e) {
  const auto& edge = b.edges[e];
  return {b.nodes.xi[edge.src], edge.code, b.nodes.xi[edge.tgt]};
}

// Groups of edges sharing (α0 src, ε, α0 tgt); only these constrain images.
std::vector<std::vector<std::size_t>> shared_key_groups(const NumericBase& b) {
  std::map<EdgeKey, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < b.edges.size(); ++e) groups[edge_key(b, e)].push_back(e);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, g] : groups) {
    if (g.size() > 1) out.push_back(std::move(g));
  }
  return out;
}

Zigzag step_image(const NumericTwoFunctor& f, const Step& s) {
  return s.mark == 0 ? f.gens[s.edge] : dagger(f.gens[s.edge]);
}

// a ++ b == z on steps, without building the concatenation.
bool is_concat(const Zigzag& z, const Zigzag& a, const Zigzag& b) {
  if (z.start != a.start || z.end != b.end || a.end != b.start) return false;
  if (z.steps.size() != a.steps.size() + b.steps.size()) return false;
  return std::equal(a.steps.begin(), a.steps.end(), z.steps.begin()) &&
         std::equal(b.steps.begin(), b.steps.end(), z.steps.begin() + a.steps.size());
}

}  // namespace

std::string NumericBase::node_name(Point x) const {
  if (x < node_names.size() && !node_names[x].empty()) return node_names[x];
  return num(x);
}

std::vector<std::string> check_base(const NumericBase& b) {
  std::vector<std::string> out;
  if (!b.node_names.empty() && b.node_names.size() != b.node_count()) out.push_back("node names do not match nodes");
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    const auto& edge = b.edges[e];
    if (edge.src >= b.node_count() || edge.tgt >= b.node_count()) {
      out.push_back("edge " + num(e) + " has an endpoint outside the nodes");
    }
  }
  return out;
}

NumericBase base_of(const MonicFormSpan& m) {
  NumericBase b;
  b.nodes = m.span.graph.a0;
  for (std::size_t k = 0; k < m.triples.size(); ++k) {
    const auto& [x, y, code] = m.triples[k];
    b.edges.push_back({x, y, code, "e" + num(k)});
  }
  return b;
}

Zigzag make_zigzag(const NumericBase& b, Point start, std::vector<Step> steps) {
  if (start >= b.node_count()) throw InvalidArgument("zigzag starts outside the nodes");
  Point cur = start;
  for (std::size_t l = 0; l < steps.size(); ++l) {
    const auto& s = steps[l];
    if (s.edge >= b.edges.size()) throw InvalidArgument("zigzag step " + num(l) + " names no edge");
    const auto& e = b.edges[s.edge];
    if (s.mark == 0) {
      if (e.src != cur) throw InvalidArgument("zigzag step " + num(l) + ": mark 0 but the edge does not leave here");
      cur = e.tgt;
    } else if (s.mark == 1) {
      if (e.tgt != cur) throw InvalidArgument("zigzag step " + num(l) + ": mark 1 but the edge does not arrive here");
      cur = e.src;
    } else {
      throw InvalidArgument("zigzag step " + num(l) + " has a mark other than 0 or 1");
    }
  }
  return {start, cur, std::move(steps)};
}

bool is_valid(const NumericBase& b, const Zigzag& z) {
  try {
    return make_zigzag(b, z.start, z.steps).end == z.end;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::vector<Point> vertices(const NumericBase& b, const Zigzag& z) {
  std::vector<Point> out{z.start};
  for (const auto& s : z.steps) {
    const auto& e = b.edges.at(s.edge);
    out.push_back(s.mark == 0 ? e.tgt : e.src);
  }
  return out;
}

Nat alpha_wedge(const NumericBase& b, const Zigzag& z) {
  if (!is_valid(b, z)) throw InvalidArgument("alpha_wedge of an invalid zigzag");
  auto xs = vertices(b, z);
  Nat code = cantor_pair(0, b.nodes.xi[xs[0]]);
  for (std::size_t l = 0; l < z.steps.size(); ++l) {
    const auto& s = z.steps[l];
    Nat last = cantor_pair(cantor_pair(b.edges[s.edge].code, s.mark), b.nodes.xi[xs[l + 1]]);
    code = cantor_pair(l + 1, cantor_pair(code, last));
  }
  return code;
}

Zigzag dagger(const Zigzag& z) {
  Zigzag out{z.end, z.start, {}};
  out.steps.reserve(z.steps.size());
  for (auto it = z.steps.rbegin(); it != z.steps.rend(); ++it) out.steps.push_back({it->edge, 1 - it->mark});
  return out;
}

Zigzag concat(const Zigzag& z, const Zigzag& w) {
  if (z.end != w.start) throw InvalidArgument("concat: " + show(z) + " does not end where " + show(w) + " starts");
  Zigzag out{z.start, w.end, z.steps};
  out.steps.insert(out.steps.end(), w.steps.begin(), w.steps.end());
  return out;
}

std::string show(const NumericBase& b, const Zigzag& z) {
  auto xs = vertices(b, z);
  std::string out = b.node_name(xs[0]);
  for (std::size_t l = 0; l < z.steps.size(); ++l) {
    const auto& s = z.steps[l];
    out += " -" + b.edges[s.edge].name + "," + num(s.mark) + "-> " + b.node_name(xs[l + 1]);
  }
  return out;
}

std::string show(const Zigzag& z) {
  std::string out = num(z.start) + "[";
  for (std::size_t l = 0; l < z.steps.size(); ++l) {
    if (l) out += "|";
    out += "e" + num(z.steps[l].edge) + "," + num(z.steps[l].mark);
  }
  return out + "]" + num(z.end);
}

std::vector<Zigzag> enumerate_zigzags(const NumericBase& b, std::size_t bound, std::size_t cap) {
  std::vector<std::vector<std::pair<Step, Point>>> out_steps(b.node_count());
  for (std::size_t e = 0; e < b.edges.size(); ++e) {
    const auto& edge = b.edges[e];
    out_steps.at(edge.src).push_back({{e, 0}, edge.tgt});
    out_steps.at(edge.tgt).push_back({{e, 1}, edge.src});
  }
  for (auto& v : out_steps) std::sort(v.begin(), v.end());
  std::vector<Zigzag> out;
  for (Point x = 0; x < b.node_count(); ++x) out.push_back(Zigzag::unit(x));
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= bound; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& [step, next] : out_steps[out[i].end]) {
        Zigzag z{out[i].start, next, out[i].steps};
        z.steps.push_back(step);
        out.push_back(std::move(z));
        if (out.size() > cap) throw CapExceeded("cap", "zigzag enumeration exceeds cap");
      }
    }
    level_begin = level_end;
  }
  return out;
}

// ---------------------------------------------------------------------------

NumericTwoGroupoid free_dagger_numeric(const MonicFormSpan& m, std::size_t L) { return {base_of(m), L}; }

std::optional<std::size_t> CellTable::find(const Zigzag& z) const {
  auto it = index.find(z);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

CellTable make_cell_table(const NumericTwoGroupoid& g, std::size_t cap) {
  CellTable t;
  t.cells = enumerate_zigzags(g.base, g.L, cap);
  const std::size_t n = t.cells.size();
  t.codes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.index.emplace(t.cells[i], i);
    t.codes.push_back(alpha_wedge(g.base, t.cells[i]));
  }
  t.unit_of.resize(g.base.node_count());
  t.dagger_of.resize(n);
  t.prefix_of.resize(n);
  t.splits.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& z = t.cells[i];
    if (z.length() == 0) t.unit_of[z.start] = i;
    t.dagger_of[i] = t.index.at(dagger(z));
    auto xs = vertices(g.base, z);
    if (z.length() == 0) {
      t.prefix_of[i] = i;
    } else {
      Zigzag p{z.start, xs[z.length() - 1], {z.steps.begin(), z.steps.end() - 1}};
      t.prefix_of[i] = t.index.at(p);
    }
    for (std::size_t k = 1; k < z.length(); ++k) {
      Zigzag a{z.start, xs[k], {z.steps.begin(), z.steps.begin() + k}};
      Zigzag b{xs[k], z.end, {z.steps.begin() + k, z.steps.end()}};
      t.splits[i].push_back({t.index.at(a), t.index.at(b)});
    }
  }
  return t;
}

std::size_t two_cells_between(const CellTable& t, std::size_t from, std::size_t to) {
  const auto& a = t.cells.at(from);
  const auto& b = t.cells.at(to);
  return a.start == b.start && a.end == b.end ? 1 : 0;
}

bool alpha_wedge_injective(const NumericBase&, const CellTable& t) {
  std::set<std::tuple<Point, Point, Nat>> seen;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    if (!seen.emplace(t.cells[i].start, t.cells[i].end, t.codes[i]).second) return false;
  }
  return true;
}

std::vector<std::string> check_two_groupoid(const NumericTwoGroupoid& g, const CellTable& t) {
  auto out = check_base(g.base);
  if (!out.empty()) return out;
  const std::size_t n = t.cells.size();
  auto cell = [&](std::size_t i) { return show(g.base, t.cells[i]); };
  for (Point x = 0; x < g.base.node_count(); ++x) {
    const auto& u = t.cells[t.unit_of[x]];
    if (u.start != x || u.end != x || u.length() != 0) out.push_back("r1 is not a unit at node " + num(x));
  }
  std::map<Nat, Nat> s1_codes;
  std::map<std::pair<Nat, Nat>, Nat> c1_codes;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& z = t.cells[i];
    if (!is_valid(g.base, z)) out.push_back("cell " + num(i) + " is not a zigzag");
    // s1: involution, reverses endpoints, fixes units.
    const std::size_t d = t.dagger_of[i];
    if (t.dagger_of[d] != i) out.push_back("dagger is not an involution at " + cell(i));
    if (t.cells[d].start != z.end || t.cells[d].end != z.start) out.push_back("dagger does not reverse " + cell(i));
    if (z.length() == 0 && d != i) out.push_back("dagger moves the unit " + cell(i));
    if (!consistent_insert(s1_codes, t.codes[i], t.codes[d])) out.push_back("s1 is not realizer-consistent");
    // c1: units on both sides.
    if (concat(t.cells[t.unit_of[z.start]], z) != z || concat(z, t.cells[t.unit_of[z.end]]) != z) {
      out.push_back("unit law fails at " + cell(i));
    }
    for (auto [a, b] : t.splits[i]) {
      if (!is_concat(z, t.cells[a], t.cells[b])) out.push_back("composite mismatch at " + cell(i));
      if (!consistent_insert(c1_codes, std::make_pair(t.codes[a], t.codes[b]), t.codes[i])) {
        out.push_back("c1 is not realizer-consistent at " + cell(i));
      }
      // Contravariance: (a b)† = b† a†.
      if (!is_concat(t.cells[d], t.cells[t.dagger_of[b]], t.cells[t.dagger_of[a]])) {
        out.push_back("dagger is not contravariant at " + cell(i));
      }
    }
    // Associativity over every pair of cut points.
    for (std::size_t j = 0; j < t.splits[i].size(); ++j) {
      for (std::size_t k = j + 1; k < t.splits[i].size(); ++k) {
        auto [ab, c] = t.splits[i][k];
        auto [a, bc] = t.splits[i][j];
        if (!is_concat(z, t.cells[ab], t.cells[c]) || !is_concat(z, t.cells[a], t.cells[bc])) {
          out.push_back("associativity fails at " + cell(i));
        }
      }
    }
    // q: a 2-cell from f f† to the unit, present whenever f f† fits.
    if (2 * z.length() <= g.L && t.cells[d].start == z.end) {
      auto ff = t.find(concat(z, t.cells[d]));
      if (!ff) {
        out.push_back("f f-dagger missing for " + cell(i));
      } else if (two_cells_between(t, *ff, t.unit_of[z.start]) != 1) {
        out.push_back("no 2-cell q for " + cell(i));
      }
    }
  }
  if (!out.empty()) return out;
  // Every parallel pair carries exactly one 2-cell; the 2-cell operations
  // (r2, s2, vertical and horizontal composition) only ever produce pairs of
  // parallel cells, so all 2-cell equations hold.
  std::map<std::pair<Point, Point>, std::vector<std::size_t>> homs;
  for (std::size_t i = 0; i < n; ++i) homs[{t.cells[i].start, t.cells[i].end}].push_back(i);
  for (const auto& [ends, members] : homs) {
    for (auto a : members) {
      for (auto b : members) {
        if (two_cells_between(t, a, b) != 1) out.push_back("missing 2-cell between " + cell(a) + " and " + cell(b));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph<Pasm> U_graph(const NumericTwoGroupoid& g, const CellTable& t) {
  const std::size_t n = t.cells.size(), n0 = g.base.node_count();
  std::vector<Point> d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d1[i] = t.cells[i].start;
    d2[i] = t.cells[i].end;
  }
  return Graph<Pasm>{PartitionedAssembly{t.codes}, g.base.nodes, PointMap(std::move(d1), n0),
                     PointMap(std::move(d2), n0)};
}

TruncatedSpan U_underlying(const NumericTwoGroupoid& g, const CellTable& t) {
  TruncatedSpan u;
  u.graph = U_graph(g, t);
  const std::size_t n = t.cells.size();
  u.r = PointMap(t.unit_of, n);
  u.s = PointMap(t.dagger_of, n);
  u.pairs = composable_pairs(u.graph);
  u.t.resize(u.pairs.apex.size());
  for (Point p = 0; p < u.t.size(); ++p) {
    auto z = concat(t.cells[u.pairs.leg1(p)], t.cells[u.pairs.leg2(p)]);
    if (z.length() <= g.L) u.t[p] = t.index.at(z);
  }
  return u;
}

std::vector<std::string> check_truncated_span(const TruncatedSpan& u) {
  auto out = check_graph(u.graph);
  if (!out.empty()) return out;
  const auto& g = u.graph;
  if (!is_morphism<Pasm>(g.a0, g.a1, u.r)) out.push_back("r is not a morphism");
  if (!is_morphism<Pasm>(g.a1, g.a1, u.s)) out.push_back("s is not a morphism");
  for (Point x = 0; x < g.a0.size(); ++x) {
    if (g.d1(u.r(x)) != x || g.d2(u.r(x)) != x) out.push_back("reflexivity fails at object " + num(x));
  }
  for (Point a = 0; a < g.a1.size(); ++a) {
    if (g.d1(u.s(a)) != g.d2(a) || g.d2(u.s(a)) != g.d1(a)) out.push_back("symmetry fails at cell " + num(a));
  }
  std::map<Nat, Nat> t_codes;
  for (Point p = 0; p < u.t.size(); ++p) {
    if (!u.t[p]) continue;
    Point a = u.pairs.leg1(p), b = u.pairs.leg2(p), c = *u.t[p];
    if (g.d1(c) != g.d1(a) || g.d2(c) != g.d2(b)) out.push_back("compatibility fails at pair " + num(p));
    if (!consistent_insert(t_codes, u.pairs.apex.xi[p], g.a1.xi[c])) {
      out.push_back("t is not realizer-consistent at pair " + num(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Zigzag apply(const NumericTwoFunctor& f, const Zigzag& z) {
  Zigzag out = Zigzag::unit(f.f0(z.start));
  for (const auto& s : z.steps) out = concat(out, step_image(f, s));
  return out;
}

NumericTwoFunctor compose(const NumericTwoFunctor& g, const NumericTwoFunctor& f) {
  NumericTwoFunctor out{compose(g.f0, f.f0), {}};
  out.gens.reserve(f.gens.size());
  for (const auto& z : f.gens) out.gens.push_back(apply(g, z));
  return out;
}

NumericTwoFunctor identity_functor(const NumericBase& b) {
  NumericTwoFunctor f{PointMap::identity(b.node_count()), {}};
  for (std::size_t e = 0; e < b.edges.size(); ++e) f.gens.push_back(single_step(b, e));
  return f;
}

std::string show(const NumericTwoFunctor& f) {
  std::string out = "(f0 " + f.f0.to_string() + "; gens";
  for (const auto& z : f.gens) out += " " + show(z);
  return out + ")";
}

std::vector<std::string> check_functor_data(const NumericBase& src, const NumericBase& tgt,
                                            const NumericTwoFunctor& f) {
  if (f.f0.domain_size() != src.node_count() || f.f0.codomain_size() != tgt.node_count()) {
    return {"object part has the wrong endpoints"};
  }
  if (f.gens.size() != src.edges.size()) return {"generator images do not match the edges"};
  std::vector<std::string> out;
  if (!is_morphism<Pasm>(src.nodes, tgt.nodes, f.f0)) out.push_back("object part is not realizer-consistent");
  for (std::size_t e = 0; e < src.edges.size(); ++e) {
    const auto& z = f.gens[e];
    if (!is_valid(tgt, z)) {
      out.push_back("image of " + src.edges[e].name + " is not a zigzag");
    } else if (z.start != f.f0(src.edges[e].src) || z.end != f.f0(src.edges[e].tgt)) {
      out.push_back("image of " + src.edges[e].name + " has the wrong endpoints");
    }
  }
  if (!out.empty()) return out;
  for (const auto& group : shared_key_groups(src)) {
    const Nat first = alpha_wedge(tgt, f.gens[group.front()]);
    for (auto e : group) {
      if (alpha_wedge(tgt, f.gens[e]) != first) {
        out.push_back("generator images are not realizer-consistent at " + src.edges[e].name);
      }
    }
  }
  return out;
}

std::vector<std::string> check_two_functor(const NumericTwoGroupoid& src, const CellTable& t,
                                           const NumericBase& tgt, const NumericTwoFunctor& f) {
  auto out = check_functor_data(src.base, tgt, f);
  if (!out.empty()) return out;
  const std::size_t n = t.cells.size();
  // Images built step by step from the prefix; the laws below then compare
  // them against every other way of cutting the cell.
  std::vector<Zigzag> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& z = t.cells[i];
    if (z.length() == 0) {
      img[i] = Zigzag::unit(f.f0(z.start));
    } else {
      img[i] = concat(img[t.prefix_of[i]], step_image(f, z.steps.back()));
    }
  }
  auto cell = [&](std::size_t i) { return show(src.base, t.cells[i]); };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& z = t.cells[i];
    // Faces: F commutes with d11 and d12, hence also with the 2-cell faces,
    // and each 2-cell (z, z') lands on the 2-cell (F z, F z').
    if (img[i].start != f.f0(z.start) || img[i].end != f.f0(z.end)) out.push_back("faces fail at " + cell(i));
    if (img[t.dagger_of[i]] != dagger(img[i])) out.push_back("dagger not preserved at " + cell(i));
    for (auto [a, b] : t.splits[i]) {
      if (!is_concat(img[i], img[a], img[b])) out.push_back("composition not preserved at " + cell(i));
    }
    if (img[i] != apply(f, z)) out.push_back("image differs from the free extension at " + cell(i));
  }
  return out;
}

std::vector<NumericTwoFunctor> enumerate_two_functors(const NumericBase& src, const NumericBase& tgt,
                                                      std::size_t gen_bound, std::size_t cap) {
  std::map<std::pair<Point, Point>, std::vector<Zigzag>> short_cells;
  for (auto& z : enumerate_zigzags(tgt, gen_bound, cap)) short_cells[{z.start, z.end}].push_back(std::move(z));
  const auto groups = shared_key_groups(src);
  const std::size_t ne = src.edges.size();
  const std::size_t node_budget = cap * (ne + 1) + 1;
  std::size_t visited = 0;
  std::vector<NumericTwoFunctor> out;
  static const std::vector<Zigzag> none;
  for (const auto& f0 : hom_set<Pasm>(src.nodes, tgt.nodes, cap)) {
    std::vector<const std::vector<Zigzag>*> choices(ne);
    bool empty = false;
    for (std::size_t e = 0; e < ne && !empty; ++e) {
      auto it = short_cells.find({f0(src.edges[e].src), f0(src.edges[e].tgt)});
      choices[e] = it == short_cells.end() ? &none : &it->second;
      empty = choices[e]->empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pick(ne, 0);
    while (true) {
      if (++visited > node_budget) throw CapExceeded("cap", "2-functor enumeration exceeds cap");
      NumericTwoFunctor f{f0, {}};
      f.gens.reserve(ne);
      for (std::size_t e = 0; e < ne; ++e) f.gens.push_back((*choices[e])[pick[e]]);
      bool ok = true;
      for (const auto& group : groups) {
        const Nat first = alpha_wedge(tgt, f.gens[group.front()]);
        for (auto e : group) ok = ok && alpha_wedge(tgt, f.gens[e]) == first;
      }
      if (ok) {
        out.push_back(std::move(f));
        if (out.size() > cap) throw CapExceeded("cap", "2-functor hom-set exceeds cap");
      }
      std::size_t e = 0;
      while (e < ne && ++pick[e] == choices[e]->size()) pick[e++] = 0;
      if (e == ne) break;
    }
  }
  return out;
}

NumericTwoFunctor lift_to_2functor(const NumericTwoGroupoid& g, const CellTable& gt, const NumericTwoGroupoid& h,
                                   const CellTable& ht, const GraphHom& f) {
  if (f.f0.domain_size() != g.base.node_count() || f.f1.domain_size() != gt.cells.size() ||
      f.f1.codomain_size() != ht.cells.size()) {
    throw InvalidArgument("lift_to_2functor: homomorphism does not fit the truncations");
  }
  if (!is_graph_hom<Pasm>(U_graph(g, gt), U_graph(h, ht), f)) {
    throw PreconditionViolation("lift_to_2functor: not a homomorphism of the underlying spans");
  }
  NumericTwoFunctor out{f.f0, {}};
  for (std::size_t e = 0; e < g.base.edges.size(); ++e) {
    out.gens.push_back(ht.cells[f.f1(gt.index.at(single_step(g.base, e)))]);
  }
  auto bad = check_two_functor(g, gt, h.base, out);
  if (!bad.empty()) throw InternalInvariant("lifted 2-functor fails: " + bad.front());
  return out;
}

// ---------------------------------------------------------------------------

NumericBase box_product(const NumericBase& x, const NumericBase& y) {
  NumericBase out;
  const std::size_t m0 = y.node_count();
  for (Point a = 0; a < x.node_count(); ++a) {
    for (Point b = 0; b < m0; ++b) {
      out.nodes.xi.push_back(cantor_pair(x.nodes.xi[a], y.nodes.xi[b]));
      out.node_names.push_back("(" + x.node_name(a) + "," + y.node_name(b) + ")");
    }
  }
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    for (Point b = 0; b < m0; ++b) {
      const auto& edge = x.edges[e];
      out.edges.push_back({edge.src * m0 + b, edge.tgt * m0 + b, cantor_pair(0, cantor_pair(edge.code, y.nodes.xi[b])),
                           "(" + edge.name + "," + y.node_name(b) + ")"});
    }
  }
  for (Point a = 0; a < x.node_count(); ++a) {
    for (const auto& edge : y.edges) {
      out.edges.push_back({a * m0 + edge.src, a * m0 + edge.tgt, cantor_pair(1, cantor_pair(x.nodes.xi[a], edge.code)),
                           "(" + x.node_name(a) + "," + edge.name + ")"});
    }
  }
  return out;
}

NumericTwoFunctor box_right(const NumericBase& x, const NumericBase& a, const NumericBase& b,
                            const NumericTwoFunctor& f) {
  const std::size_t a0 = a.node_count(), b0 = b.node_count();
  const std::size_t xe = x.edges.size(), ae = a.edges.size(), be = b.edges.size();
  std::vector<Point> f0(x.node_count() * a0);
  for (Point p = 0; p < x.node_count(); ++p) {
    for (Point q = 0; q < a0; ++q) f0[p * a0 + q] = p * b0 + f.f0(q);
  }
  NumericTwoFunctor out{PointMap(std::move(f0), x.node_count() * b0), {}};
  for (std::size_t e = 0; e < xe; ++e) {
    for (Point q = 0; q < a0; ++q) {
      Point fq = f.f0(q);
      out.gens.push_back({x.edges[e].src * b0 + fq, x.edges[e].tgt * b0 + fq, {{e * b0 + fq, 0}}});
    }
  }
  for (Point p = 0; p < x.node_count(); ++p) {
    for (std::size_t e = 0; e < ae; ++e) {
      const auto& z = f.gens[e];
      Zigzag slice{p * b0 + z.start, p * b0 + z.end, {}};
      for (const auto& s : z.steps) slice.steps.push_back({xe * b0 + p * be + s.edge, s.mark});
      out.gens.push_back(std::move(slice));
    }
  }
  return out;
}

NumericTwoFunctor box_projection(const NumericBase& x, const NumericBase& y) {
  const std::size_t m0 = y.node_count();
  std::vector<Point> f0(x.node_count() * m0);
  for (Point p = 0; p < f0.size(); ++p) f0[p] = p / m0;
  NumericTwoFunctor out{PointMap(std::move(f0), x.node_count()), {}};
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    for (Point q = 0; q < m0; ++q) out.gens.push_back(single_step(x, e));
  }
  for (Point p = 0; p < x.node_count(); ++p) {
    for (std::size_t e = 0; e < y.edges.size(); ++e) out.gens.push_back(Zigzag::unit(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

NumericBase terminal_base() { return NumericBase{Pasm::terminal(), {}, {}}; }

NumericBase interval_base() {
  NumericBase b{PartitionedAssembly{{0, 1}}, {{0, 1, 0, "u"}}, {}};
  return b;
}

NumericBase path_base() {
  return NumericBase{PartitionedAssembly{{0, 1, 2}}, {{0, 1, 0, "u"}, {1, 2, 1, "v"}}, {}};
}

NumericTwoGroupoid interval_two_groupoid(std::size_t L) { return {interval_base(), L}; }

IntervalObjectData<NumericModel> numeric_interval_data() {
  IntervalObjectData<NumericModel> d;
  d.terminal = terminal_base();
  d.interval = interval_base();
  d.pushout = path_base();
  d.e0 = {PointMap({0}, 2), {}};
  d.e1 = {PointMap({1}, 2), {}};
  d.in0 = {PointMap({0, 1}, 3), {{0, 1, {{0, 0}}}}};
  d.in1 = {PointMap({1, 2}, 3), {{1, 2, {{1, 0}}}}};
  d.gamma = {PointMap({0, 2}, 3), {{0, 2, {{0, 0}, {1, 0}}}}};
  d.iota = {PointMap({1, 0}, 2), {{1, 0, {{0, 1}}}}};
  return d;
}

// ---------------------------------------------------------------------------

Report essential_surjectivity_check(const std::string& name, const PasmSpan& s, std::size_t L, std::size_t cap) {
  Report report;
  report.suite = "essential-surjectivity";
  auto m = monic_form(s, cap);
  {
    CheckResult c{name + ": monic form"};
    if (!triple_is_monic(m.span)) c.fail("the triple is not monic");
    for (const auto& why : check_equivalence_span(m.span)) c.fail(why);
    c.note("arcs " + num(s.graph.a1.size()) + " -> triples " + num(m.triples.size()));
    report.checks.push_back(std::move(c));
  }
  NumericTwoGroupoid g = free_dagger_numeric(m, L);
  CellTable t = make_cell_table(g, cap);
  {
    CheckResult c{name + ": free dagger 2-groupoid"};
    for (const auto& why : check_two_groupoid(g, t)) c.fail(why);
    c.note("1-cells up to length " + num(L) + ": " + num(t.cells.size()));
    c.note(std::string("alpha-wedge with endpoints injective: ") + (alpha_wedge_injective(g.base, t) ? "yes" : "no"));
    report.checks.push_back(std::move(c));
  }
  TruncatedSpan u = U_underlying(g, t);
  {
    CheckResult c{name + ": U(G) is an equivalence span on the truncation"};
    for (const auto& why : check_truncated_span(u)) c.fail(why);
    report.checks.push_back(std::move(c));
  }
  CheckResult c{name + ": U(G) is isomorphic to the span"};
  const auto& a = s.graph;
  const std::size_t n0 = a.a0.size();
  // phi: S -> U(G), each arc to the one-step zigzag over its triple.
  std::vector<Point> phi1(a.a1.size());
  for (Point x = 0; x < a.a1.size(); ++x) {
    phi1[x] = t.index.at(single_step(g.base, m.f.fn(x)));
  }
  GraphHom phi{PointMap(std::move(phi1), t.cells.size()), PointMap::identity(n0)};
  // psi: U(G) -> S, folding a zigzag with r, the section, s and t.
  auto pairs = composable_pairs(a);
  std::vector<Point> psi1(t.cells.size());
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    const auto& z = t.cells[i];
    if (z.length() == 0) {
      psi1[i] = s.r(z.start);
      continue;
    }
    const auto& st = z.steps.back();
    Point last = m.section.fn(st.edge);
    if (st.mark == 1) last = s.s(last);
    if (z.length() == 1) {
      psi1[i] = last;
    } else {
      auto p = pairs.index_of(psi1[t.prefix_of[i]], last);
      if (!p) throw InternalInvariant("fold meets a non-consecutive pair");
      psi1[i] = s.t(*p);
    }
  }
  GraphHom psi{PointMap(std::move(psi1), a.a1.size()), PointMap::identity(n0)};
  bool homs = true;
  if (!is_graph_hom<Pasm>(a, u.graph, phi)) {
    c.fail("phi is not a homomorphism S -> U(G)");
    homs = false;
  }
  if (!is_graph_hom<Pasm>(u.graph, a, psi)) {
    c.fail("psi is not a homomorphism U(G) -> S");
    homs = false;
  }
  if (homs) {
    if (!homs_identified<Pasm>(a, a, compose_homs(psi, phi), identity_hom(a.a1.size(), n0), cap)) {
      c.fail("psi.phi is not identified with the identity");
    }
    if (!homs_identified<Pasm>(u.graph, u.graph, compose_homs(phi, psi), identity_hom(t.cells.size(), n0), cap)) {
      c.fail("phi.psi is not identified with the identity");
    }
  }
  c.note("phi on arcs: " + phi.f1.to_string());
  c.note("psi folds " + num(t.cells.size()) + " cells; on one-step cells:");
  for (std::size_t e = 0; e < g.base.edges.size(); ++e) {
    std::size_t i = t.index.at(single_step(g.base, e));
    c.note("  " + show(g.base, t.cells[i]) + " |-> arc " + num(psi.f1(i)));
  }
  report.checks.push_back(std::move(c));
  return report;
}

NumericTwoFunctor cylinder_end(const NumericBase& g, Point end) {
  std::vector<Point> f0(g.node_count());
  for (Point x = 0; x < f0.size(); ++x) f0[x] = x * 2 + end;
  NumericTwoFunctor out{PointMap(std::move(f0), g.node_count() * 2), {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    out.gens.push_back({g.edges[e].src * 2 + end, g.edges[e].tgt * 2 + end, {{e * 2 + end, 0}}});
  }
  return out;
}

NumericTwoFunctor homotopy_from_identification(const NumericBase& g, const NumericBase& h,
                                               const NumericTwoFunctor& f, const NumericTwoFunctor& fp,
                                               const std::vector<Zigzag>& k) {
  const std::size_t n0 = g.node_count();
  if (k.size() != n0) throw InvalidArgument("k does not cover the objects");
  for (Point x = 0; x < n0; ++x) {
    if (k[x].start != f.f0(x) || k[x].end != fp.f0(x)) {
      throw PreconditionViolation("k fails F0 = d11 k or F'0 = d12 k at object " + num(x));
    }
  }
  std::vector<Point> f0(n0 * 2);
  for (Point x = 0; x < n0; ++x) {
    f0[x * 2] = f.f0(x);
    f0[x * 2 + 1] = fp.f0(x);
  }
  NumericTwoFunctor K{PointMap(std::move(f0), h.node_count()), {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    K.gens.push_back(f.gens[e]);
    K.gens.push_back(fp.gens[e]);
  }
  for (Point x = 0; x < n0; ++x) K.gens.push_back(k[x]);
  return K;
}

std::vector<std::string> check_homotopy(const NumericBase& g, const NumericTwoGroupoid& cylinder,
                                        const CellTable& cylinder_cells, const NumericBase& h,
                                        const NumericTwoFunctor& f, const NumericTwoFunctor& fp,
                                        const std::vector<Zigzag>& k, const NumericTwoFunctor& K) {
  std::vector<std::string> out;
  std::map<Nat, Nat> k_codes;
  for (Point x = 0; x < g.node_count(); ++x) {
    if (!is_valid(h, k[x]) || k[x].start != f.f0(x) || k[x].end != fp.f0(x)) {
      out.push_back("k(" + num(x) + ") does not connect F0 x to F'0 x");
      continue;
    }
    if (!consistent_insert(k_codes, g.nodes.xi[x], alpha_wedge(h, k[x]))) out.push_back("k is not realizer-consistent");
  }
  if (!out.empty()) return out;
  for (const auto& why : check_two_functor(cylinder, cylinder_cells, h, K)) out.push_back(why);
  if (!out.empty()) return out;
  if (compose(K, cylinder_end(g, 0)) != f) out.push_back("K does not restrict to F at end 0");
  if (compose(K, cylinder_end(g, 1)) != fp) out.push_back("K does not restrict to F' at end 1");
  for (Point x = 0; x < g.node_count(); ++x) {
    Zigzag gen = single_step(cylinder.base, g.edges.size() * 2 + x);
    if (apply(K, gen) != k[x]) out.push_back("K does not act by k on the generator at " + num(x));
  }
  return out;
}

Report homotopy_quotient_check_N(const std::vector<NumericFixture>& fixtures, std::size_t cap) {
  Report report;
  report.suite = "homotopy-quotient-N";
  const std::size_t nf = fixtures.size();
  std::vector<CellTable> tables;
  std::vector<Graph<Pasm>> graphs;
  std::vector<NumericTwoGroupoid> cylinders;
  std::vector<CellTable> cylinder_tables;
  CheckResult laws{"numeric fixtures are 2-groupoids embedded in G0 x G0 x N"};
  for (const auto& fx : fixtures) {
    tables.push_back(make_cell_table(fx.groupoid, cap));
    graphs.push_back(U_graph(fx.groupoid, tables.back()));
    cylinders.push_back({box_product(fx.groupoid.base, interval_base()), fx.groupoid.L});
    cylinder_tables.push_back(make_cell_table(cylinders.back(), cap));
    for (const auto& why : check_two_groupoid(fx.groupoid, tables.back())) laws.fail(fx.name + ": " + why);
    for (const auto& why : check_two_groupoid(cylinders.back(), cylinder_tables.back())) {
      laws.fail(fx.name + " box I: " + why);
    }
    if (!alpha_wedge_injective(fx.groupoid.base, tables.back())) laws.fail(fx.name + ": cell codes collide");
    laws.note(fx.name + ": " + num(tables.back().cells.size()) + " cells, cylinder " +
              num(cylinder_tables.back().cells.size()) + " cells");
  }
  report.checks.push_back(std::move(laws));

  CheckResult functor_laws{"enumerated 2-functors pass the law check"};
  CheckResult agree{"U-identified iff homotopic"};
  CheckResult witnesses{"identification witnesses give law-passing homotopies"};
  CheckResult equivalence{"homotopy is an equivalence relation"};
  for (std::size_t gi = 0; gi < nf; ++gi) {
    for (std::size_t hi = 0; hi < nf; ++hi) {
      const auto& G = fixtures[gi].groupoid;
      const auto& H = fixtures[hi].groupoid;
      const auto& ht = tables[hi];
      const std::string pair_name = fixtures[gi].name + " -> " + fixtures[hi].name;
      auto functors = enumerate_two_functors(G.base, H.base, 1, cap);
      for (const auto& f : functors) {
        for (const auto& why : check_two_functor(G, tables[gi], H.base, f)) {
          functor_laws.fail(pair_name + ": " + show(f) + ": " + why);
        }
      }
      std::map<std::pair<Point, Point>, std::vector<std::size_t>> cells_by_ends;
      for (std::size_t i = 0; i < ht.cells.size(); ++i) cells_by_ends[{ht.cells[i].start, ht.cells[i].end}].push_back(i);
      const std::size_t n = functors.size();
      std::vector<std::vector<bool>> homotopic(n, std::vector<bool>(n));
      std::size_t identified = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const auto& F = functors[i];
          const auto& Fp = functors[j];
          // Route A: the object parts identified through U(H).
          auto w = homs_identified<Pasm>(G.base.nodes, graphs[hi], F.f0, Fp.f0, cap);
          if (w) {
            ++identified;
            std::vector<Zigzag> k;
            for (Point x = 0; x < G.base.node_count(); ++x) k.push_back(ht.cells[(*w)(x)]);
            auto K = homotopy_from_identification(G.base, H.base, F, Fp, k);
            for (const auto& why : check_homotopy(G.base, cylinders[gi], cylinder_tables[gi], H.base, F, Fp, k, K)) {
              witnesses.fail(pair_name + ": " + show(F) + " ~ " + show(Fp) + ": " + why);
            }
          }
          // Route B: every k over the endpoint fibres, each K validated.
          std::vector<const std::vector<std::size_t>*> fibres;
          bool empty = false;
          for (Point x = 0; x < G.base.node_count() && !empty; ++x) {
            auto it = cells_by_ends.find({F.f0(x), Fp.f0(x)});
            empty = it == cells_by_ends.end();
            if (!empty) fibres.push_back(&it->second);
          }
          bool found = false;
          if (!empty) {
            std::vector<std::size_t> pick(fibres.size(), 0);
            std::size_t tries = 0;
            while (!found) {
              if (++tries > cap) throw CapExceeded("cap", "homotopy search exceeds cap");
              std::vector<Zigzag> k;
              for (std::size_t x = 0; x < fibres.size(); ++x) k.push_back(ht.cells[(*fibres[x])[pick[x]]]);
              auto K = homotopy_from_identification(G.base, H.base, F, Fp, k);
              found = check_homotopy(G.base, cylinders[gi], cylinder_tables[gi], H.base, F, Fp, k, K).empty();
              std::size_t x = 0;
              while (x < fibres.size() && ++pick[x] == fibres[x]->size()) pick[x++] = 0;
              if (x == fibres.size()) break;
            }
          }
          homotopic[i][j] = found;
          if (found != w.has_value()) {
            agree.fail(pair_name + ": " + show(F) + " vs " + show(Fp) + (found ? " homotopic" : " not homotopic") +
                       " but " + (w ? "identified" : "not identified"));
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!homotopic[i][i]) equivalence.fail(pair_name + ": not reflexive at " + show(functors[i]));
        for (std::size_t j = 0; j < n; ++j) {
          if (homotopic[i][j] != homotopic[j][i]) equivalence.fail(pair_name + ": not symmetric");
          // Given reflexivity and symmetry, transitivity says related rows agree.
          if (homotopic[i][j] && homotopic[i] != homotopic[j]) equivalence.fail(pair_name + ": not transitive");
        }
      }
      std::set<std::vector<bool>> classes(homotopic.begin(), homotopic.end());
      agree.note(pair_name + ": " + num(n) + " 2-functors, " + num(classes.size()) + " classes, " + num(identified) +
                 " identified pairs");
    }
  }
  report.checks.push_back(std::move(functor_laws));
  report.checks.push_back(std::move(agree));
  report.checks.push_back(std::move(witnesses));
  report.checks.push_back(std::move(equivalence));
  return report;
}

}  // namespace eqlab
