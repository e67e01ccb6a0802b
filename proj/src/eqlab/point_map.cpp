#include "eqlab/point_map.hpp"

#include <algorithm>
#include <sstream>

#include "eqlab/error.hpp"

namespace eqlab {

PointMap::PointMap(std::vector<Point> image, std::size_t codomain_size)
    : image_(std::move(image)), codomain_(codomain_size) {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= codomain_) {
      throw InvalidArgument("point map sends " + std::to_string(i) + " to " +
                            std::to_string(image_[i]) + ", outside a codomain of size " +
                            std::to_string(codomain_));
    }
  }
}

PointMap PointMap::identity(std::size_t n) {
  std::vector<Point> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return PointMap(std::move(image), n);
}

PointMap PointMap::constant(std::size_t domain_size, std::size_t codomain_size, Point value) {
  return PointMap(std::vector<Point>(domain_size, value), codomain_size);
}

bool PointMap::injective() const {
  std::vector<bool> seen(codomain_, false);
  for (Point p : image_) {
    if (seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

std::string PointMap::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) out << (i ? "," : "") << image_[i];
  out << ']';
  return out.str();
}

std::strong_ordering operator<=>(const PointMap& a, const PointMap& b) {
  if (auto c = std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(),
                                                       b.image_.begin(), b.image_.end());
      c != 0) {
    return c;
  }
  return a.codomain_ <=> b.codomain_;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  if (f.codomain_size() != g.domain_size()) {
    throw InvalidArgument("cannot compose: codomain of size " + std::to_string(f.codomain_size()) +
                          " does not match domain of size " + std::to_string(g.domain_size()));
  }
  std::vector<Point> image(f.domain_size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g(f(i));
  return PointMap(std::move(image), g.codomain_size());
}

PointMap inclusion_of(const std::vector<Point>& members, std::size_t ambient_size) {
  return PointMap(members, ambient_size);
}

}  // namespace eqlab
