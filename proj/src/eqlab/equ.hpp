#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eqlab/cat.hpp"
#include "eqlab/fintop.hpp"

namespace eqlab {

// An equivalence relation on {0..n-1}, stored as its full pair set.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;
  // Validates reflexivity, symmetry and transitivity.
  static EquivalenceRelation from_pairs(std::size_t n, const std::vector<std::pair<Point, Point>>& pairs);
  static EquivalenceRelation diagonal(std::size_t n);
  static EquivalenceRelation total(std::size_t n);
  // Relation whose classes are the blocks of `block_of`.
  static EquivalenceRelation from_blocks(const std::vector<std::size_t>& block_of);

  std::size_t size() const noexcept { return n_; }
  bool related(Point x, Point y) const { return rel_[x * n_ + y] != 0; }
  // Lexicographic pair list.
  std::vector<std::pair<Point, Point>> pairs() const;
  std::vector<Point> class_of(Point x) const;

  friend bool operator==(const EquivalenceRelation&, const EquivalenceRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

struct Equilogical {
  FinSpace space;
  EquivalenceRelation rel;

  // Validates that the space is T0 and the relation lives on its points.
  static Equilogical make(FinSpace space, EquivalenceRelation rel);
  std::size_t size() const noexcept { return space.size(); }

  friend bool operator==(const Equilogical&, const Equilogical&) = default;
};

// A map of equilogical spaces: the class of a continuous relation-preserving
// function, held by its least representative in lexicographic order.
class EquMap {
 public:
  EquMap() = default;
  const PointMap& representative() const noexcept { return rep_; }
  friend bool operator==(const EquMap&, const EquMap&) = default;
  friend auto operator<=>(const EquMap& a, const EquMap& b) { return a.rep_ <=> b.rep_; }

 private:
  friend EquMap make_equ_map(const Equilogical&, const Equilogical&, const PointMap&, std::size_t);
  explicit EquMap(PointMap rep) : rep_(std::move(rep)) {}
  PointMap rep_;
};

bool is_equ_map_rep(const Equilogical& e, const Equilogical& f, const PointMap& fn);

// f(x) ~F g(x) for every x.
bool maps_equivalent(const Equilogical& e, const Equilogical& f, const PointMap& a, const PointMap& b);

// Every representative in the class of `fn`.
std::vector<PointMap> equ_class_members(const Equilogical& e, const Equilogical& f,
                                        const PointMap& fn, std::size_t cap = kDefaultCap);

EquMap make_equ_map(const Equilogical& e, const Equilogical& f, const PointMap& fn,
                    std::size_t cap = kDefaultCap);

EquMap identity_equ_map(const Equilogical& e);

// [g] . [f] computed on representatives.
EquMap compose(const Equilogical& e, const Equilogical& f, const Equilogical& g,
               const EquMap& gmap, const EquMap& fmap);

struct EquProduct {
  Equilogical object;
  EquMap proj1;
  EquMap proj2;
};

EquProduct product_equ(const Equilogical& e, const Equilogical& f);

// (s, =) for a T0 space.
Equilogical embed_T0(const FinSpace& s);

struct EquHomClass {
  EquMap map;
  std::vector<PointMap> members;
};

// All continuous relation-preserving functions, grouped into classes, ordered
// by canonical representative.
std::vector<EquHomClass> equ_hom_set(const Equilogical& e, const Equilogical& f,
                                     std::size_t cap = kDefaultCap);

// Representatives (continuous, relation-preserving functions) as a concrete
// category, so the generic enumerators apply.
struct EquReps {
  using Object = Equilogical;
  static std::size_t size(const Equilogical& e) { return e.size(); }
  static bool admits_last(const Equilogical& src, const Equilogical& tgt, std::span<const Point> prefix);
  static Equilogical product_subset(const Equilogical& a, const Equilogical& b,
                                    const std::vector<std::pair<Point, Point>>& pairs);
  static Equilogical restrict(const Equilogical& e, const std::vector<Point>& subset);
  static Equilogical terminal() { return embed_T0(FinSpace::point()); }
  static const char* name() { return "Equ"; }
};

}  // namespace eqlab
