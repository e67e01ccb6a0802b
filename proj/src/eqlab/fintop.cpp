#include "eqlab/fintop.hpp"

#include <algorithm>
#include <set>

#include "eqlab/error.hpp"

namespace eqlab {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<Point>& subset, std::size_t n) {
  Mask m = 0;
  for (Point p : subset) {
    if (p >= n) throw InvalidArgument("open set mentions point " + std::to_string(p) + " of a " +
                                      std::to_string(n) + "-point space");
    m |= Mask{1} << p;
  }
  return m;
}

}  // namespace

FinSpace FinSpace::from_opens(std::size_t points, const std::vector<std::vector<Point>>& opens) {
  if (points > 64) throw InvalidArgument("explicit open lists are limited to 64 points");
  const Mask full = points == 64 ? ~Mask{0} : ((Mask{1} << points) - 1);
  std::set<Mask> family;
  for (const auto& u : opens) family.insert(to_mask(u, points));
  if (!family.count(0)) throw InvalidArgument("not a topology: the empty set is not open");
  if (!family.count(full)) throw InvalidArgument("not a topology: the whole space is not open");
  for (Mask a : family) {
    for (Mask b : family) {
      if (!family.count(a | b)) throw InvalidArgument("not a topology: not closed under union");
      if (!family.count(a & b)) throw InvalidArgument("not a topology: not closed under intersection");
    }
  }
  std::vector<std::uint8_t> leq(points * points, 1);
  for (Mask u : family) {
    for (Point x = 0; x < points; ++x) {
      if (!(u >> x & 1)) continue;
      for (Point y = 0; y < points; ++y) {
        if (!(u >> y & 1)) leq[x * points + y] = 0;
      }
    }
  }
  FinSpace s;
  s.n_ = points;
  s.leq_ = std::move(leq);
  return s;
}

FinSpace FinSpace::from_order(std::size_t points, std::vector<std::uint8_t> leq) {
  if (leq.size() != points * points) throw InvalidArgument("order matrix has the wrong size");
  for (Point x = 0; x < points; ++x) {
    if (!leq[x * points + x]) throw InvalidArgument("specialization order is not reflexive");
    for (Point y = 0; y < points; ++y) {
      if (!leq[x * points + y]) continue;
      for (Point z = 0; z < points; ++z) {
        if (leq[y * points + z] && !leq[x * points + z]) {
          throw InvalidArgument("specialization order is not transitive");
        }
      }
    }
  }
  FinSpace s;
  s.n_ = points;
  s.leq_ = std::move(leq);
  return s;
}

FinSpace FinSpace::discrete(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  FinSpace s;
  s.n_ = n;
  s.leq_ = std::move(leq);
  return s;
}

FinSpace FinSpace::indiscrete(std::size_t n) {
  FinSpace s;
  s.n_ = n;
  s.leq_.assign(n * n, 1);
  return s;
}

FinSpace FinSpace::sierpinski() { return from_order(2, {1, 1, 0, 1}); }

bool FinSpace::is_open(const std::vector<Point>& subset) const {
  std::vector<bool> in(n_, false);
  for (Point p : subset) {
    if (p >= n_) return false;
    in[p] = true;
  }
  for (Point x = 0; x < n_; ++x) {
    if (!in[x]) continue;
    for (Point y = 0; y < n_; ++y) {
      if (leq(x, y) && !in[y]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Point>> FinSpace::opens(std::size_t cap) const {
  // Backtrack over points in order; choosing x forces its up-set in, leaving
  // x out forces its down-set out.
  std::vector<std::vector<Point>> out;
  std::vector<int> state(n_, -1);
  auto recurse = [&](auto&& self, Point x) -> void {
    if (x == n_) {
      std::vector<Point> u;
      for (Point p = 0; p < n_; ++p) {
        if (state[p] == 1) u.push_back(p);
      }
      out.push_back(std::move(u));
      if (out.size() > cap) throw CapExceeded("cap", "open-set enumeration exceeds cap");
      return;
    }
    if (state[x] != -1) {
      self(self, x + 1);
      return;
    }
    for (int choice : {0, 1}) {
      std::vector<int> saved = state;
      bool ok = true;
      for (Point y = 0; y < n_ && ok; ++y) {
        bool forced = choice == 1 ? leq(x, y) : leq(y, x);
        if (!forced) continue;
        if (state[y] == -1) state[y] = choice;
        else if (state[y] != choice) ok = false;
      }
      if (ok) self(self, x + 1);
      state = std::move(saved);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_T0(const FinSpace& s) {
  for (Point x = 0; x < s.size(); ++x) {
    for (Point y = x + 1; y < s.size(); ++y) {
      if (s.leq(x, y) && s.leq(y, x)) return false;
    }
  }
  return true;
}

bool is_continuous(const ContMap& m) {
  if (m.fn.domain_size() != m.source.size() || m.fn.codomain_size() != m.target.size()) return false;
  for (Point x = 0; x < m.source.size(); ++x) {
    for (Point y = 0; y < m.source.size(); ++y) {
      if (m.source.leq(x, y) && !m.target.leq(m.fn(x), m.fn(y))) return false;
    }
  }
  return true;
}

ProductSpace product_space(const FinSpace& a, const FinSpace& b, std::size_t point_cap) {
  if (a.size() * b.size() > point_cap) {
    throw CapExceeded("points", "product space would have " + std::to_string(a.size() * b.size()) +
                                    " points, above the cap of " + std::to_string(point_cap));
  }
  auto cone = product<FinTop>(a, b);
  return {std::move(cone.apex), std::move(cone.leg1), std::move(cone.leg2)};
}

Subspace subspace(const FinSpace& s, const std::vector<Point>& subset) {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (subset[i] >= s.size()) throw InvalidArgument("subspace point outside the space");
    if (i && subset[i] <= subset[i - 1]) throw InvalidArgument("subspace points must be strictly increasing");
  }
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i * k + j] = s.leq(subset[i], subset[j]);
  }
  return {FinSpace::from_order(k, std::move(leq)), inclusion_of(subset, s.size())};
}

bool is_subspace_inclusion(const ContMap& m) {
  if (!is_continuous(m) || !m.fn.injective()) return false;
  for (Point x = 0; x < m.source.size(); ++x) {
    for (Point y = 0; y < m.source.size(); ++y) {
      if (m.source.leq(x, y) != m.target.leq(m.fn(x), m.fn(y))) return false;
    }
  }
  return true;
}

bool FinTop::admits_last(const FinSpace& src, const FinSpace& tgt, std::span<const Point> prefix) {
  const Point p = prefix.size() - 1;
  const Point fp = prefix[p];
  for (Point j = 0; j <= p; ++j) {
    if (src.leq(j, p) && !tgt.leq(prefix[j], fp)) return false;
    if (src.leq(p, j) && !tgt.leq(fp, prefix[j])) return false;
  }
  return true;
}

FinSpace FinTop::product_subset(const FinSpace& a, const FinSpace& b,
                                const std::vector<std::pair<Point, Point>>& pairs) {
  const std::size_t k = pairs.size();
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = a.leq(pairs[i].first, pairs[j].first) && b.leq(pairs[i].second, pairs[j].second);
    }
  }
  return FinSpace::from_order(k, std::move(leq));
}

}  // namespace eqlab
