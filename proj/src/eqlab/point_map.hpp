#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eqlab {

using Point = std::size_t;

// A total function between finite carriers {0..n-1} -> {0..m-1}. Every
// morphism in the concrete ambient categories is carried by one of these.
class PointMap {
 public:
  PointMap() = default;
  PointMap(std::vector<Point> image, std::size_t codomain_size);

  static PointMap identity(std::size_t n);
  static PointMap constant(std::size_t domain_size, std::size_t codomain_size, Point value);

  std::size_t domain_size() const noexcept { return image_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_; }
  Point operator()(Point x) const { return image_[x]; }
  std::span<const Point> values() const noexcept { return image_; }

  bool injective() const;
  std::string to_string() const;

  friend bool operator==(const PointMap&, const PointMap&) = default;
  friend std::strong_ordering operator<=>(const PointMap& a, const PointMap& b);

 private:
  std::vector<Point> image_;
  std::size_t codomain_ = 0;
};

// g after f.
PointMap compose(const PointMap& g, const PointMap& f);

// Subset given as the sorted list of its members, as an inclusion map.
PointMap inclusion_of(const std::vector<Point>& members, std::size_t ambient_size);

}  // namespace eqlab
