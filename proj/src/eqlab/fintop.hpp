#pragma once

// Finite topological spaces and continuous maps.
//
// A finite topology is closed under arbitrary unions and intersections, so it
// is determined by its specialization preorder (x <= y iff every open
// containing x contains y) and its opens are exactly the up-sets. Spaces are
// stored that way; the open-set view is recovered on demand. Construction
// from an explicit open list validates the list and rejects anything that is
// not a topology.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqlab/cat.hpp"
#include "eqlab/point_map.hpp"

namespace eqlab {

class FinSpace {
 public:
  FinSpace() = default;

  static FinSpace from_opens(std::size_t points, const std::vector<std::vector<Point>>& opens);
  // `leq` is row-major, points * points; must be reflexive and transitive.
  static FinSpace from_order(std::size_t points, std::vector<std::uint8_t> leq);

  static FinSpace point() { return discrete(1); }
  static FinSpace empty() { return discrete(0); }
  static FinSpace discrete(std::size_t n);
  static FinSpace indiscrete(std::size_t n);
  // Points {0, 1}, opens {}, {1}, {0, 1}.
  static FinSpace sierpinski();

  std::size_t size() const noexcept { return n_; }
  bool leq(Point x, Point y) const { return leq_[x * n_ + y] != 0; }
  bool is_open(const std::vector<Point>& subset) const;

  // All opens as sorted point lists, ordered by (size, lexicographic).
  std::vector<std::vector<Point>> opens(std::size_t cap = kDefaultCap) const;

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
};

bool is_T0(const FinSpace& s);

struct ContMap {
  FinSpace source;
  FinSpace target;
  PointMap fn;
};

bool is_continuous(const ContMap& m);

struct ProductSpace {
  FinSpace space;
  PointMap proj1;
  PointMap proj2;
};

// Pairs in lexicographic order, (i, j) at index i * |b| + j.
ProductSpace product_space(const FinSpace& a, const FinSpace& b,
                           std::size_t point_cap = 4096);

struct Subspace {
  FinSpace space;
  PointMap inclusion;
};

Subspace subspace(const FinSpace& s, const std::vector<Point>& subset);

// Injective, and the source topology is the one traced along the map.
bool is_subspace_inclusion(const ContMap& m);

// Ambient category instance: finite spaces and continuous maps.
struct FinTop {
  using Object = FinSpace;
  static std::size_t size(const FinSpace& s) { return s.size(); }
  static bool admits_last(const FinSpace& src, const FinSpace& tgt, std::span<const Point> prefix);
  static FinSpace product_subset(const FinSpace& a, const FinSpace& b,
                                 const std::vector<std::pair<Point, Point>>& pairs);
  static FinSpace restrict(const FinSpace& s, const std::vector<Point>& subset) {
    return subspace(s, subset).space;
  }
  static FinSpace terminal() { return FinSpace::point(); }
  static const char* name() { return "Top0"; }
};

}  // namespace eqlab
