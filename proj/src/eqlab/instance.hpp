#pragma once

// Instance files: JSON with named declarations per section, cross-referenced
// by name. Every object is validated while loading; problems surface as
// ParseError naming the section and object.
//
//   {
//     "config": {"budget": 1000, "cap": 2000000, "zigzag_bound": 3, "seed": 20240917},
//     "packs": ["top-spans", "pasm-spans", "numeric"],
//     "spaces": {"S": {"points": 2, "opens": [[], [1], [0, 1]]}},
//     "equilogical": {"E": {"space": "S", "rel": [[0, 0], [1, 1]]}},
//     "spans": {"GE": {"ambient": "fintop", "equilogical": "E"}},
//     "assemblies": {"A": {"carrier": 2, "xi": [0, 1]}},
//     "morphisms": {"f": {"src": "A", "tgt": "A", "fn": [1, 0], "tracker": "(ifz in 1 0)"}},
//     "groupoids": {"G": {"span": "GE"}},
//     "twogroupoid_bases": {"I": {"nodes": "A", "edges": [{"src": 0, "tgt": 1, "code": 0, "name": "u"}]}}
//   }
//
// Wherever an object is expected, a name or an inline declaration works.
// Naturals may be JSON numbers or decimal strings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqlab/equ.hpp"
#include "eqlab/fintop.hpp"
#include "eqlab/groupoid.hpp"
#include "eqlab/pasm.hpp"
#include "eqlab/spans.hpp"
#include "eqlab/twogroupoid.hpp"

namespace eqlab {

struct Config {
  std::size_t budget = 1000;  // evaluator budget for explicit trackers and the encoding suite
  std::size_t cap = kDefaultCap;
  std::size_t zigzag_bound = 3;  // L
  std::uint64_t seed = 20240917;
};

struct NamedMorphism {
  std::string name;
  std::string src;
  std::string tgt;
  PAsmMorphism morphism;
};

struct NamedGroupoid {
  std::string name;
  TopGroupoid groupoid;
};

struct NamedBase {
  std::string name;
  NumericBase base;
};

// Sections keep declaration order; packs come after the file's own objects,
// named top/..., pasm/... and numeric/....
struct Instance {
  Config config;
  std::vector<std::pair<std::string, FinSpace>> spaces;
  std::vector<std::pair<std::string, Equilogical>> equilogical;
  std::vector<NamedTopSpan> top_spans;
  std::vector<NamedPasmSpan> pasm_spans;
  std::vector<std::pair<std::string, PartitionedAssembly>> assemblies;
  std::vector<NamedMorphism> morphisms;
  std::vector<NamedGroupoid> groupoids;
  std::vector<NamedBase> bases;
};

using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

// Overrides replace values from the config section before any object is
// built, so packs see the overridden seed and L.
Instance load_instance_string(const std::string& text, const ConfigOverrides& overrides = {});
Instance load_instance_file(const std::string& path, const ConfigOverrides& overrides = {});

// One override: budget, cap, zigzag_bound or seed, as a decimal string.
// Throws InvalidArgument on an unknown key or bad value.
void set_config(Config& c, const std::string& key, const std::string& value);

// Graphviz text for a span, groupoid or 2-groupoid base. Zigzags up to
// `zigzag_bound` are listed as labeled paths in a comment block.
std::string emit_dot(const Instance& inst, const std::string& name);

}  // namespace eqlab
