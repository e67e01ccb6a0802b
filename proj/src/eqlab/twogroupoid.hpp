#pragma once

// Numeric 2-groupoids: free dagger categories on a graph of assemblies, with
// zigzag words as 1-cells and exactly one 2-cell between any two parallel
// 1-cells. The free category is infinite; cells are enumerated up to a
// length bound L while functors act on words of any length.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/groupoid.hpp"
#include "eqlab/pasm.hpp"
#include "eqlab/report.hpp"

namespace eqlab {

struct BaseEdge {
  Point src;
  Point tgt;
  Nat code;  // ε, the realizer of the edge
  std::string name;
  friend bool operator==(const BaseEdge&, const BaseEdge&) = default;
};

// The generating graph. Node realizers are α0.
struct NumericBase {
  PartitionedAssembly nodes;
  std::vector<BaseEdge> edges;
  std::vector<std::string> node_names;  // optional, for display

  std::size_t node_count() const { return nodes.size(); }
  std::string node_name(Point x) const;
  friend bool operator==(const NumericBase&, const NumericBase&) = default;
};

std::vector<std::string> check_base(const NumericBase& b);

// Edges are the triples of the monic form, in order, named e0, e1, ...
NumericBase base_of(const MonicFormSpan& m);

// Mark 0 walks an edge forwards, mark 1 backwards.
struct Step {
  std::size_t edge;
  int mark;
  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Zigzag {
  Point start = 0;
  Point end = 0;
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
  static Zigzag unit(Point x) { return {x, x, {}}; }
  friend bool operator==(const Zigzag&, const Zigzag&) = default;
  friend auto operator<=>(const Zigzag&, const Zigzag&) = default;
};

// Builds the zigzag from a start node and steps, checking every side condition.
Zigzag make_zigzag(const NumericBase& b, Point start, std::vector<Step> steps);
bool is_valid(const NumericBase& b, const Zigzag& z);
std::vector<Point> vertices(const NumericBase& b, const Zigzag& z);

// ⟨0, α0 x⟩ for a unit; ⟨n+1, ⟨α^(prefix), ⟨⟨ε e, i⟩, α0 x_{n+1}⟩⟩⟩ otherwise.
Nat alpha_wedge(const NumericBase& b, const Zigzag& z);

Zigzag dagger(const Zigzag& z);
// z then w; throws InvalidArgument unless z ends where w starts.
Zigzag concat(const Zigzag& z, const Zigzag& w);
std::string show(const NumericBase& b, const Zigzag& z);
std::string show(const Zigzag& z);  // without names: 0[e0,0|e1,1]2

// Every valid zigzag with at most `bound` steps, ordered by length, then
// start node, then steps.
std::vector<Zigzag> enumerate_zigzags(const NumericBase& b, std::size_t bound, std::size_t cap = kDefaultCap);

// ---------------------------------------------------------------------------

struct NumericTwoGroupoid {
  NumericBase base;
  std::size_t L = 3;
};

NumericTwoGroupoid free_dagger_numeric(const MonicFormSpan& m, std::size_t L);

// The truncation G_1 (cells of length <= L) with the structure the
// truncated checks need: prefix, last step, dagger and every split.
struct CellTable {
  std::vector<Zigzag> cells;
  std::vector<Nat> codes;  // α^
  std::map<Zigzag, std::size_t> index;
  std::vector<std::size_t> dagger_of;
  std::vector<std::size_t> prefix_of;  // all but the last step; a unit is its own prefix
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> splits;  // z = a then b, both in the table
  std::vector<std::size_t> unit_of;                                       // node -> index of ⟨x⟩

  std::optional<std::size_t> find(const Zigzag& z) const;
};

CellTable make_cell_table(const NumericTwoGroupoid& g, std::size_t cap = kDefaultCap);

// The laws of a 2-groupoid checked pointwise on the truncation, with
// composition partial beyond L; also the embedding into G0 x G0 x N (x N).
std::vector<std::string> check_two_groupoid(const NumericTwoGroupoid& g, const CellTable& t);

// 2-cells are pairs of parallel table cells: from `from` to `to` there is
// one or none.
std::size_t two_cells_between(const CellTable& t, std::size_t from, std::size_t to);

// The triple (d11, d12, α^) is injective on the table.
bool alpha_wedge_injective(const NumericBase& b, const CellTable& t);

// ---------------------------------------------------------------------------
// U: the underlying equivalence span G_1 => G_0 of the truncation.

struct TruncatedSpan {
  Graph<Pasm> graph;
  PointMap r;
  PointMap s;
  PullbackCone<Pasm> pairs;
  std::vector<std::optional<Point>> t;  // undefined when the composite exceeds L
};

Graph<Pasm> U_graph(const NumericTwoGroupoid& g, const CellTable& t);
TruncatedSpan U_underlying(const NumericTwoGroupoid& g, const CellTable& t);
std::vector<std::string> check_truncated_span(const TruncatedSpan& u);

// ---------------------------------------------------------------------------
// Strict 2-functors. On a free dagger category a functor is its object part
// and the image of each generating edge; the 2-cell part is forced.

struct NumericTwoFunctor {
  PointMap f0;
  std::vector<Zigzag> gens;  // image of each edge of the source base

  friend bool operator==(const NumericTwoFunctor&, const NumericTwoFunctor&) = default;
  friend auto operator<=>(const NumericTwoFunctor&, const NumericTwoFunctor&) = default;
};

Zigzag apply(const NumericTwoFunctor& f, const Zigzag& z);
// g after f.
NumericTwoFunctor compose(const NumericTwoFunctor& g, const NumericTwoFunctor& f);
NumericTwoFunctor identity_functor(const NumericBase& b);
std::string show(const NumericTwoFunctor& f);

// Graph-level conditions: endpoints, valid images, realizer consistency.
// Consistency on every word follows from consistency on f0 and on the
// generator images keyed by (α0 src, ε, α0 tgt), since α^ is a list code.
std::vector<std::string> check_functor_data(const NumericBase& src, const NumericBase& tgt,
                                            const NumericTwoFunctor& f);

// Functor laws on every cell of the source truncation.
std::vector<std::string> check_two_functor(const NumericTwoGroupoid& src, const CellTable& t,
                                           const NumericBase& tgt, const NumericTwoFunctor& f);

// Every 2-functor whose generator images have at most gen_bound steps.
std::vector<NumericTwoFunctor> enumerate_two_functors(const NumericBase& src, const NumericBase& tgt,
                                                      std::size_t gen_bound = 1, std::size_t cap = kDefaultCap);

// A span homomorphism U(G) -> U(H) read as a 2-functor: f0 kept, each
// generator sent to the image of its one-step cell.
NumericTwoFunctor lift_to_2functor(const NumericTwoGroupoid& g, const CellTable& gt, const NumericTwoGroupoid& h,
                                   const CellTable& ht, const GraphHom& f);

// ---------------------------------------------------------------------------
// Box product: the free dagger category on the box product of the bases.
// Nodes (x, y) sit at x * |Y0| + y with realizer ⟨α0 x, β0 y⟩; edges (e, y)
// come first at e * |Y0| + y with code ⟨0, ⟨ε e, β0 y⟩⟩, then edges (x, e')
// at |E_X| * |Y0| + x * |E_Y| + e' with code ⟨1, ⟨α0 x, ε' e'⟩⟩.

NumericBase box_product(const NumericBase& x, const NumericBase& y);
// id_X box f.
NumericTwoFunctor box_right(const NumericBase& x, const NumericBase& a, const NumericBase& b,
                            const NumericTwoFunctor& f);
NumericTwoFunctor box_projection(const NumericBase& x, const NumericBase& y);

// ---------------------------------------------------------------------------
// The interval.

NumericBase terminal_base();
NumericBase interval_base();  // nodes 0, 1 with realizers 0, 1; edge u: 0 -> 1 with code 0
NumericTwoGroupoid interval_two_groupoid(std::size_t L = 3);

struct NumericModel {
  using Object = NumericBase;
  using Morphism = NumericTwoFunctor;
  using Key = NumericTwoFunctor;
  static Morphism compose(const Object&, const Object&, const Object&, const Morphism& g, const Morphism& f) {
    return eqlab::compose(g, f);
  }
  static Morphism identity(const Object& a) { return identity_functor(a); }
  static bool equal(const Object&, const Object&, const Morphism& f, const Morphism& g) { return f == g; }
  static Key key(const Object&, const Object&, const Morphism& f) { return f; }
  static std::vector<Morphism> hom(const Object& a, const Object& b, std::size_t cap) {
    return enumerate_two_functors(a, b, 1, cap);
  }
  static Object product(const Object& a, const Object& b) { return box_product(a, b); }
  static Morphism times(const Object& x, const Object& a, const Object& b, const Morphism& f) {
    return box_right(x, a, b, f);
  }
  static std::string show(const Morphism& f) { return eqlab::show(f); }
};

IntervalObjectData<NumericModel> numeric_interval_data();

// ---------------------------------------------------------------------------
// The two theorems.

// Monic form, free dagger 2-groupoid, U, and the explicit isomorphism with S
// in the quotient.
Report essential_surjectivity_check(const std::string& name, const PasmSpan& s, std::size_t L,
                                    std::size_t cap = kDefaultCap);

NumericBase path_base();  // 0 -u-> 1 -v-> 2, the pushout I +_T I

// End inclusion G -> G box I.
NumericTwoFunctor cylinder_end(const NumericBase& g, Point end);

// K on G box I: F at end 0, F' at end 1, and k(x) on the generator (x, u).
NumericTwoFunctor homotopy_from_identification(const NumericBase& g, const NumericBase& h,
                                               const NumericTwoFunctor& f, const NumericTwoFunctor& fp,
                                               const std::vector<Zigzag>& k);

// Everything K has to satisfy; empty when it is a homotopy from F to F'.
std::vector<std::string> check_homotopy(const NumericBase& g, const NumericTwoGroupoid& cylinder,
                                        const CellTable& cylinder_cells, const NumericBase& h, const NumericTwoFunctor& f,
                                        const NumericTwoFunctor& fp, const std::vector<Zigzag>& k,
                                        const NumericTwoFunctor& K);

struct NumericFixture {
  std::string name;
  NumericTwoGroupoid groupoid;
};

Report homotopy_quotient_check_N(const std::vector<NumericFixture>& fixtures, std::size_t cap = kDefaultCap);

}  // namespace eqlab
