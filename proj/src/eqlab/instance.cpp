#include "eqlab/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "eqlab/error.hpp"
#include "eqlab/fixtures.hpp"

namespace eqlab {

namespace {

using Json = nlohmann::ordered_json;

// Where in the file we are, for error messages: "spans.GE.d1".
class Loader {
 public:
  Loader(Instance& inst, const ConfigOverrides& overrides) : inst_(inst), overrides_(overrides) {}

  void load(const Json& root) {
    if (!root.is_object()) throw ParseError("instance file: top level must be an object");
    static const std::set<std::string> known{"config",     "packs",     "spaces",    "equilogical",      "spans",
                                             "assemblies", "morphisms", "groupoids", "twogroupoid_bases"};
    for (const auto& [key, value] : root.items()) {
      if (!known.count(key)) throw ParseError("instance file: unknown section '" + key + "'");
    }
    if (root.contains("config")) config(root["config"]);
    for (const auto& [key, value] : overrides_) set_config(inst_.config, key, value);
    section(root, "spaces", [&](const std::string& n, const Json& j) { inst_.spaces.emplace_back(n, space(j, n)); });
    section(root, "equilogical",
            [&](const std::string& n, const Json& j) { inst_.equilogical.emplace_back(n, equilogical(j, n)); });
    section(root, "assemblies",
            [&](const std::string& n, const Json& j) { inst_.assemblies.emplace_back(n, assembly(j, n)); });
    section(root, "spans", [&](const std::string& n, const Json& j) { span(j, n); });
    section(root, "morphisms", [&](const std::string& n, const Json& j) { morphism(j, n); });
    section(root, "groupoids", [&](const std::string& n, const Json& j) { groupoid(j, n); });
    section(root, "twogroupoid_bases", [&](const std::string& n, const Json& j) { base(j, n); });
    if (root.contains("packs")) packs(root["packs"]);
  }

 private:
  Instance& inst_;
  const ConfigOverrides& overrides_;
  std::set<std::string> names_;

  [[noreturn]] static void fail(const std::string& where, const std::string& why) {
    throw ParseError(where + ": " + why);
  }

  template <class F>
  void section(const Json& root, const char* key, F&& each) {
    if (!root.contains(key)) return;
    const Json& s = root[key];
    if (!s.is_object()) fail(key, "section must be an object of named declarations");
    for (const auto& [name, value] : s.items()) {
      claim(key, name);
      try {
        each(name, value);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        fail(std::string(key) + "." + name, e.what());
      } catch (const nlohmann::json::exception& e) {
        fail(std::string(key) + "." + name, e.what());
      }
    }
  }

  // Names are unique per section; spans, groupoids and bases share one
  // namespace since emit_dot looks them up together.
  void claim(const std::string& section, const std::string& name) {
    static const std::set<std::string> drawable{"spans", "groupoids", "twogroupoid_bases"};
    const std::string scope = drawable.count(section) ? "drawable" : section;
    if (!names_.insert(scope + "/" + name).second) fail(section + "." + name, "name '" + name + "' is declared twice");
  }

  static std::size_t count(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  static Nat nat(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
    if (j.is_string()) {
      try {
        return nat_from_string(j.get<std::string>());
      } catch (const Error& e) {
        fail(where, e.what());
      }
    }
    fail(where, "expected a natural number");
  }

  static const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    return j[key];
  }

  static std::vector<Point> points(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of indices");
    std::vector<Point> out;
    for (const auto& v : j) out.push_back(count(v, where));
    return out;
  }

  static PointMap map(const Json& j, std::size_t domain, std::size_t codomain, const std::string& where) {
    auto image = points(j, where);
    if (image.size() != domain) fail(where, "expected " + std::to_string(domain) + " entries");
    for (Point p : image) {
      if (p >= codomain) fail(where, "index " + std::to_string(p) + " out of range");
    }
    return PointMap(std::move(image), codomain);
  }

  static std::vector<std::pair<Point, Point>> pairs(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of pairs");
    std::vector<std::pair<Point, Point>> out;
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) fail(where, "expected [i, j]");
      out.emplace_back(count(p[0], where), count(p[1], where));
    }
    return out;
  }

  template <class T>
  static const T& lookup(const std::vector<std::pair<std::string, T>>& v, const std::string& name,
                         const std::string& where) {
    for (const auto& [n, x] : v) {
      if (n == name) return x;
    }
    fail(where, "unresolved reference '" + name + "'");
  }

  void config(const Json& j) {
    if (!j.is_object()) fail("config", "must be an object");
    for (const auto& [key, value] : j.items()) {
      const std::string where = "config." + key;
      if (key == "seed") {
        if (!value.is_number_unsigned()) fail(where, "expected a non-negative integer");
        inst_.config.seed = value.get<std::uint64_t>();
        continue;
      }
      std::size_t v = count(value, where);
      if (key == "budget") {
        if (v == 0) fail(where, "must be positive");
        inst_.config.budget = v;
      } else if (key == "cap") {
        inst_.config.cap = v;
      } else if (key == "zigzag_bound") {
        inst_.config.zigzag_bound = v;
      } else {
        fail(where, "unknown key");
      }
    }
  }

  FinSpace space(const Json& j, const std::string& name) {
    const std::string where = "spaces." + name;
    if (j.is_string()) return lookup(inst_.spaces, j.get<std::string>(), where);
    const std::size_t n = count(field(j, "points", where), where + ".points");
    const Json& opens = field(j, "opens", where);
    if (!opens.is_array()) fail(where + ".opens", "expected an array of point lists");
    std::vector<std::vector<Point>> list;
    for (const auto& o : opens) {
      list.push_back(points(o, where + ".opens"));
      for (Point p : list.back()) {
        if (p >= n) fail(where + ".opens", "point " + std::to_string(p) + " out of range");
      }
    }
    try {
      return FinSpace::from_opens(n, list);
    } catch (const Error& e) {
      fail(where, "space '" + name + "' is rejected: " + e.what());
    }
  }

  Equilogical equilogical(const Json& j, const std::string& name) {
    const std::string where = "equilogical." + name;
    if (j.is_string()) return lookup(inst_.equilogical, j.get<std::string>(), where);
    FinSpace s = space(field(j, "space", where), name + ".space");
    auto rel = EquivalenceRelation::from_pairs(s.size(), pairs(field(j, "rel", where), where + ".rel"));
    return Equilogical::make(std::move(s), std::move(rel));
  }

  PartitionedAssembly assembly(const Json& j, const std::string& name) {
    const std::string where = "assemblies." + name;
    if (j.is_string()) return lookup(inst_.assemblies, j.get<std::string>(), where);
    const std::size_t n = count(field(j, "carrier", where), where + ".carrier");
    const Json& xi = field(j, "xi", where);
    if (!xi.is_array() || xi.size() != n) fail(where + ".xi", "expected " + std::to_string(n) + " realizers");
    PartitionedAssembly a;
    for (const auto& v : xi) a.xi.push_back(nat(v, where + ".xi"));
    return a;
  }

  template <ConcreteCategory C, class Obj>
  EquivalenceSpan<C> explicit_span(const Json& j, const std::string& where, Obj nodes, Obj arcs) {
    const std::size_t n0 = C::size(nodes), n1 = C::size(arcs);
    Graph<C> g{arcs, nodes, map(field(j, "d1", where), n1, n0, where + ".d1"),
               map(field(j, "d2", where), n1, n0, where + ".d2")};
    auto bad = check_graph(g);
    if (!bad.empty()) fail(where, bad.front());
    // Structure maps default to the least-index choice.
    const bool have_all = j.contains("r") && j.contains("s") && j.contains("t");
    StructureSolutions sol;
    if (!have_all) {
      sol = solve_structure_maps(g, inst_.config.cap);
      if (sol.r.empty() || sol.s.empty() || sol.t.empty()) fail(where, "no structure maps make this an equivalence span");
    }
    const std::size_t np = C::size(composable_pairs(g).apex);
    EquivalenceSpan<C> e{g, j.contains("r") ? map(j["r"], n0, n1, where + ".r") : sol.r.front(),
                         j.contains("s") ? map(j["s"], n1, n1, where + ".s") : sol.s.front(),
                         j.contains("t") ? map(j["t"], np, n1, where + ".t") : sol.t.front()};
    return e;
  }

  void span(const Json& j, const std::string& name) {
    const std::string where = "spans." + name;
    const Json& amb = field(j, "ambient", where);
    if (amb == "fintop") {
      TopSpan e;
      if (j.contains("equilogical")) {
        e = functor_G(equilogical(j["equilogical"], name + ".equilogical"));
      } else {
        e = explicit_span<FinTop>(j, where, space(field(j, "nodes", where), name + ".nodes"),
                                  space(field(j, "arcs", where), name + ".arcs"));
      }
      auto bad = check_equivalence_span(e);
      if (!bad.empty()) fail(where, "not an equivalence span: " + bad.front());
      inst_.top_spans.push_back({name, std::move(e)});
    } else if (amb == "pasm") {
      PasmSpan e;
      auto nodes = assembly(field(j, "nodes", where), name + ".nodes");
      if (j.contains("relation")) {
        auto rel = EquivalenceRelation::from_pairs(nodes.size(), pairs(j["relation"], where + ".relation"));
        auto dup = j.contains("duplicates") ? pairs(j["duplicates"], where + ".duplicates")
                                            : std::vector<std::pair<Point, Point>>{};
        auto mode = ArcRealizers::Paired;
        if (j.contains("arc_realizers")) {
          if (j["arc_realizers"] == "constant") {
            mode = ArcRealizers::Constant;
          } else if (j["arc_realizers"] != "paired") {
            fail(where + ".arc_realizers", "expected \"paired\" or \"constant\"");
          }
        }
        e = relation_span(nodes, rel, dup, mode);
      } else {
        e = explicit_span<Pasm>(j, where, nodes, assembly(field(j, "arcs", where), name + ".arcs"));
      }
      auto bad = check_equivalence_span(e);
      if (!bad.empty()) fail(where, "not an equivalence span: " + bad.front());
      inst_.pasm_spans.push_back({name, std::move(e)});
    } else {
      fail(where + ".ambient", "expected \"fintop\" or \"pasm\"");
    }
  }

  void morphism(const Json& j, const std::string& name) {
    const std::string where = "morphisms." + name;
    const std::string src = field(j, "src", where).get<std::string>();
    const std::string tgt = field(j, "tgt", where).get<std::string>();
    const auto& a = lookup(inst_.assemblies, src, where + ".src");
    const auto& b = lookup(inst_.assemblies, tgt, where + ".tgt");
    PointMap fn = map(field(j, "fn", where), a.size(), b.size(), where + ".fn");
    PAsmMorphism m;
    if (j.contains("tracker")) {
      Program p = Program::parse(j["tracker"].get<std::string>());
      std::size_t budget = j.contains("budget") ? count(j["budget"], where + ".budget") : inst_.config.budget;
      if (budget == 0) fail(where + ".budget", "must be positive");
      m = PAsmMorphism{fn, p, budget};
      if (!is_morphism(a, b, m)) fail(where, "tracker does not realize the function within budget");
    } else {
      auto t = auto_track(a, b, fn);
      if (!t) {
        fail(where, "not tracked: points " + std::to_string(t.conflict->first) + " and " +
                        std::to_string(t.conflict->second) + " share a realizer but not an image realizer");
      }
      m = *t.morphism;
    }
    inst_.morphisms.push_back({name, src, tgt, std::move(m)});
  }

  void groupoid(const Json& j, const std::string& name) {
    const std::string where = "groupoids." + name;
    TopGroupoid g;
    if (j.contains("span")) {
      const std::string ref = j["span"].get<std::string>();
      const TopSpan* found = nullptr;
      for (const auto& s : inst_.top_spans) {
        if (s.name == ref) found = &s.span;
      }
      if (!found) fail(where + ".span", "unresolved reference '" + ref + "'");
      g = groupoid_from_jointly_monic(*found);
    } else if (j.contains("builtin")) {
      const std::string b = j["builtin"].get<std::string>();
      if (b == "interval") {
        g = interval_groupoid();
      } else if (b == "terminal") {
        g = terminal_groupoid();
      } else {
        fail(where + ".builtin", "expected \"interval\" or \"terminal\"");
      }
    } else {
      fail(where, "expected 'span' or 'builtin'");
    }
    auto bad = check_groupoid(g);
    if (!bad.empty()) fail(where, "not a groupoid: " + bad.front());
    inst_.groupoids.push_back({name, std::move(g)});
  }

  void base(const Json& j, const std::string& name) {
    const std::string where = "twogroupoid_bases." + name;
    NumericBase b;
    if (j.contains("monic_form_of")) {
      const std::string ref = j["monic_form_of"].get<std::string>();
      const PasmSpan* found = nullptr;
      for (const auto& s : inst_.pasm_spans) {
        if (s.name == ref) found = &s.span;
      }
      if (!found) fail(where + ".monic_form_of", "unresolved reference '" + ref + "'");
      b = base_of(monic_form(*found, inst_.config.cap));
    } else if (j.contains("builtin")) {
      const std::string s = j["builtin"].get<std::string>();
      if (s == "interval") {
        b = interval_base();
      } else if (s == "terminal") {
        b = terminal_base();
      } else if (s == "path") {
        b = path_base();
      } else {
        fail(where + ".builtin", "expected \"interval\", \"terminal\" or \"path\"");
      }
    } else {
      b.nodes = assembly(field(j, "nodes", where), name + ".nodes");
      const Json& edges = field(j, "edges", where);
      if (!edges.is_array()) fail(where + ".edges", "expected an array");
      for (const auto& e : edges) {
        const std::string ew = where + ".edges";
        BaseEdge be{count(field(e, "src", ew), ew), count(field(e, "tgt", ew), ew), nat(field(e, "code", ew), ew),
                    e.contains("name") ? e["name"].get<std::string>() : "e" + std::to_string(b.edges.size())};
        b.edges.push_back(std::move(be));
      }
      if (j.contains("node_names")) b.node_names = j["node_names"].get<std::vector<std::string>>();
    }
    auto bad = check_base(b);
    if (!bad.empty()) fail(where, bad.front());
    inst_.bases.push_back({name, std::move(b)});
  }

  void packs(const Json& j) {
    if (!j.is_array()) fail("packs", "expected an array of pack names");
    for (const auto& p : j) {
      if (!p.is_string()) fail("packs", "expected pack names");
      const std::string pack = p.get<std::string>();
      if (pack == "top-spans") {
        for (auto& s : top_span_pack()) {
          s.name = "top/" + s.name;
          claim("spans", s.name);
          inst_.top_spans.push_back(std::move(s));
        }
      } else if (pack == "pasm-spans") {
        for (auto& s : pasm_span_pack(inst_.config.seed)) {
          s.name = "pasm/" + s.name;
          claim("spans", s.name);
          inst_.pasm_spans.push_back(std::move(s));
        }
      } else if (pack == "numeric") {
        for (auto& f : numeric_pack(inst_.config.zigzag_bound)) {
          f.name = "numeric/" + f.name;
          claim("twogroupoid_bases", f.name);
          inst_.bases.push_back({f.name, std::move(f.groupoid.base)});
        }
      } else {
        fail("packs", "unknown pack '" + pack + "' (expected top-spans, pasm-spans or numeric)");
      }
    }
  }
};

}  // namespace

Instance load_instance_string(const std::string& text, const ConfigOverrides& overrides) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("instance file: ") + e.what());
  }
  Instance inst;
  Loader(inst, overrides).load(root);
  return inst;
}

Instance load_instance_file(const std::string& path, const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return load_instance_string(text.str(), overrides);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void set_config(Config& c, const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  try {
    std::size_t used = 0;
    if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
    v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw InvalidArgument("config " + key + ": expected a non-negative integer, got '" + value + "'");
  }
  if (key == "budget") {
    if (v == 0) throw InvalidArgument("config budget: must be positive");
    c.budget = v;
  } else if (key == "cap") {
    c.cap = v;
  } else if (key == "zigzag_bound") {
    c.zigzag_bound = v;
  } else if (key == "seed") {
    c.seed = v;
  } else {
    throw InvalidArgument("unknown config key '" + key + "'");
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

template <ConcreteCategory C>
void graph_body(std::ostringstream& out, const Graph<C>& g, auto&& node_label, auto&& arc_label) {
  for (Point x = 0; x < C::size(g.a0); ++x) out << "  n" << x << " [label=" << quoted(node_label(x)) << "];\n";
  for (Point a = 0; a < C::size(g.a1); ++a) {
    out << "  n" << g.d1(a) << " -> n" << g.d2(a) << " [label=" << quoted(arc_label(a)) << "];\n";
  }
}

}  // namespace

std::string emit_dot(const Instance& inst, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (const auto& s : inst.top_spans) {
    if (s.name != name) continue;
    graph_body<FinTop>(
        out, s.span.graph, [](Point x) { return std::to_string(x); }, [](Point a) { return "a" + std::to_string(a); });
    return out.str() + "}\n";
  }
  for (const auto& s : inst.pasm_spans) {
    if (s.name != name) continue;
    const auto& g = s.span.graph;
    graph_body<Pasm>(
        out, g, [&](Point x) { return std::to_string(x) + " : " + nat_to_string(g.a0.xi[x]); },
        [&](Point a) { return "a" + std::to_string(a) + " : " + nat_to_string(g.a1.xi[a]); });
    return out.str() + "}\n";
  }
  for (const auto& gr : inst.groupoids) {
    if (gr.name != name) continue;
    const auto& g = gr.groupoid;
    graph_body<FinTop>(
        out, g.graph, [](Point x) { return std::to_string(x); },
        [&](Point a) {
          for (Point x = 0; x < g.objects(); ++x) {
            if (g.i(x) == a) return "id" + std::to_string(x);
          }
          return "a" + std::to_string(a);
        });
    return out.str() + "}\n";
  }
  for (const auto& b : inst.bases) {
    if (b.name != name) continue;
    const auto& base = b.base;
    for (Point x = 0; x < base.node_count(); ++x) {
      out << "  n" << x << " [label=" << quoted(base.node_name(x) + " : " + nat_to_string(base.nodes.xi[x]))
          << "];\n";
    }
    for (const auto& e : base.edges) {
      out << "  n" << e.src << " -> n" << e.tgt << " [label=" << quoted(e.name) << "];\n";
    }
    for (const auto& z : enumerate_zigzags(base, inst.config.zigzag_bound, inst.config.cap)) {
      if (z.length() > 0) out << "  // " << show(base, z) << '\n';
    }
    return out.str() + "}\n";
  }
  throw UnknownObject("no span, groupoid or 2-groupoid base named '" + name + "'");
}

}  // namespace eqlab
