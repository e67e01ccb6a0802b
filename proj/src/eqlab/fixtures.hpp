#pragma once

// The bundled fixture packs. Deterministic except the PAsm span pack, which
// is drawn from an explicit seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eqlab/groupoid.hpp"
#include "eqlab/pasm.hpp"
#include "eqlab/spans.hpp"
#include "eqlab/twogroupoid.hpp"

namespace eqlab {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Subspatial spans G(E) over T0 spaces with at most four points.
std::vector<NamedTopSpan> top_span_pack();
std::vector<SpanGroupoidFixture> groupoid_pack(const std::vector<NamedTopSpan>& spans);

enum class ArcRealizers {
  Paired,    // ⟨α0 x, α0 y⟩
  Constant,  // 0 everywhere; needs constant node realizers
};

// The span of an equivalence relation in PAsm: one arc per related pair, in
// lexicographic order, then one more arc for each entry of `duplicates`.
// r, s and t always pick the first arc over a pair.
PasmSpan relation_span(const PartitionedAssembly& nodes, const EquivalenceRelation& rel,
                       const std::vector<std::pair<Point, Point>>& duplicates = {},
                       ArcRealizers mode = ArcRealizers::Paired);

// Hand-picked spans followed by seeded random ones; every span has at most
// three nodes and five arcs.
std::vector<NamedPasmSpan> pasm_span_pack(std::uint64_t seed = kDefaultSeed, std::size_t random_count = 16);

// Numeric 2-groupoids on bases with at most three nodes and injective node
// realizers.
std::vector<NumericFixture> numeric_pack(std::size_t L = 3);

// Samples for product stability and test objects for pushouts.
std::vector<TopGroupoid> groupoid_interval_samples();
std::vector<TopGroupoid> groupoid_interval_tests();
std::vector<NumericBase> numeric_interval_samples();
std::vector<NumericBase> numeric_interval_tests();

// Random programs for the evaluator checks. Loop bodies never pair, so
// values stay small under any budget.
Program random_program(std::mt19937_64& rng, std::size_t depth = 4);

}  // namespace eqlab
