#pragma once

// Partitioned assemblies over the tracklang model: finite carriers with a
// realizer per point, and point functions tracked by a program.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eqlab/cat.hpp"
#include "eqlab/spans.hpp"
#include "eqlab/tracklang.hpp"

namespace eqlab {

struct PartitionedAssembly {
  std::vector<Nat> xi;  // one realizer per carrier point

  std::size_t size() const { return xi.size(); }
  friend bool operator==(const PartitionedAssembly&, const PartitionedAssembly&) = default;
};

// A point function can be tracked iff it is realizer-consistent, so the
// category is handled through that condition; trackers are evidence only.
struct Pasm {
  using Object = PartitionedAssembly;
  static std::size_t size(const PartitionedAssembly& a) { return a.size(); }
  static bool admits_last(const PartitionedAssembly& src, const PartitionedAssembly& tgt,
                          std::span<const Point> prefix);
  static PartitionedAssembly product_subset(const PartitionedAssembly& a, const PartitionedAssembly& b,
                                            const std::vector<std::pair<Point, Point>>& pairs);
  static PartitionedAssembly restrict(const PartitionedAssembly& a, const std::vector<Point>& subset);
  static PartitionedAssembly terminal() { return {{0}}; }
  static const char* name() { return "PAsm"; }
};

struct PAsmMorphism {
  PointMap fn;
  Program tracker;
  std::size_t budget = 1;
};

// The tracker square commutes within budget at every carrier point.
bool is_morphism(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f,
                 const Program& tracker, std::size_t budget);
bool is_morphism(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PAsmMorphism& m);

struct AutoTrack {
  std::optional<PAsmMorphism> morphism;
  std::optional<std::pair<Point, Point>> conflict;  // equal realizers, different images

  explicit operator bool() const { return morphism.has_value(); }
};

AutoTrack auto_track(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f);

// Like auto_track but throws PreconditionViolation naming the conflict.
PAsmMorphism track_or_throw(const PartitionedAssembly& src, const PartitionedAssembly& tgt, const PointMap& f);

struct PasmProduct {
  PartitionedAssembly apex;
  PAsmMorphism proj1;  // tracked by (fst in)
  PAsmMorphism proj2;  // tracked by (snd in)
};

PasmProduct product_pasm(const PartitionedAssembly& a, const PartitionedAssembly& b,
                         std::size_t cap = kDefaultCap);

// <f, g> into the product, tracked by (pair φ ψ).
PAsmMorphism pair_tracked(const PAsmMorphism& f, const PAsmMorphism& g, std::size_t b_size);

struct PasmEqualizer {
  PartitionedAssembly apex;
  PAsmMorphism inclusion;  // tracked by the identity program
  std::vector<Point> members;
};

PasmEqualizer equalizer_pasm(const PartitionedAssembly& src, const PartitionedAssembly& tgt,
                             const PointMap& f, const PointMap& g);

using PasmSpan = EquivalenceSpan<Pasm>;

struct MonicFormSpan {
  std::vector<std::tuple<Point, Point, Nat>> triples;  // lexicographic
  PasmSpan span;                                       // E => A0
  PAsmMorphism e1;
  PAsmMorphism e2;
  PAsmMorphism f;        // A1 -> E, tracked by the identity program
  PAsmMorphism section;  // E -> A1, least preimage
  GraphHom to_monic;     // (f, id)
  GraphHom from_monic;   // (section, id)
};

// Replaces A1 by the image of <d1, d2, α1>. The structure maps of E are read
// off through f alone; the section is only used for the comparison
// homomorphisms, which are verified mutually inverse up to identification.
MonicFormSpan monic_form(const PasmSpan& span, std::size_t cap = kDefaultCap);

// <d1, d2, α1> is injective on the carrier.
bool triple_is_monic(const PasmSpan& span);

std::string describe(const PartitionedAssembly& a);

struct NamedPasmSpan {
  std::string name;
  PasmSpan span;
};

// Per span: the triple is monic, E is an equivalence span whose structure
// maps agree with the original ones through f (no section involved), and
// the comparison homomorphisms are inverse up to identification.
Report monic_form_check(const std::vector<NamedPasmSpan>& spans, std::size_t cap = kDefaultCap);

}  // namespace eqlab
