#pragma once

// Independent reference computations for tests: topologies as explicit sets
// of open bitmasks, with no use of the library's order representation.

#include <cstdint>
#include <set>
#include <vector>

#include "eqlab/fintop.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct Top {
  std::size_t n = 0;
  std::set<Mask> opens;
};

inline Mask mask_of(const std::vector<eqlab::Point>& pts) {
  Mask m = 0;
  for (auto p : pts) m |= Mask{1} << p;
  return m;
}

inline Top from_space(const eqlab::FinSpace& s) {
  Top t{s.size(), {}};
  for (const auto& o : s.opens()) t.opens.insert(mask_of(o));
  return t;
}

inline Top from_lists(std::size_t n, const std::vector<std::vector<eqlab::Point>>& opens) {
  Top t{n, {}};
  for (const auto& o : opens) t.opens.insert(mask_of(o));
  return t;
}

// All unions of open rectangles, points (i, j) at i * b.n + j.
inline Top product(const Top& a, const Top& b) {
  std::vector<Mask> rects;
  for (Mask u : a.opens) {
    for (Mask v : b.opens) {
      Mask r = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < b.n; ++j) {
          if ((u >> i & 1) && (v >> j & 1)) r |= Mask{1} << (i * b.n + j);
        }
      }
      rects.push_back(r);
    }
  }
  std::set<Mask> unions{0};
  for (Mask r : rects) {
    std::set<Mask> next = unions;
    for (Mask u : unions) next.insert(u | r);
    unions = std::move(next);
  }
  return Top{a.n * b.n, unions};
}

inline Top trace(const Top& s, const std::vector<eqlab::Point>& subset) {
  Top t{subset.size(), {}};
  for (Mask o : s.opens) {
    Mask m = 0;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      if (o >> subset[k] & 1) m |= Mask{1} << k;
    }
    t.opens.insert(m);
  }
  return t;
}

inline bool continuous(const Top& src, const Top& tgt, const std::vector<eqlab::Point>& f) {
  for (Mask o : tgt.opens) {
    Mask pre = 0;
    for (std::size_t x = 0; x < src.n; ++x) {
      if (o >> f[x] & 1) pre |= Mask{1} << x;
    }
    if (!src.opens.count(pre)) return false;
  }
  return true;
}

inline bool t0(const Top& s) {
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = x + 1; y < s.n; ++y) {
      bool separated = false;
      for (Mask o : s.opens) separated = separated || ((o >> x & 1) != (o >> y & 1));
      if (!separated) return false;
    }
  }
  return true;
}

// Every function n -> m, as value vectors in lexicographic order.
inline std::vector<std::vector<eqlab::Point>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<eqlab::Point>> out;
  std::vector<eqlab::Point> f(n, 0);
  if (m == 0) {
    if (n == 0) out.push_back(f);
    return out;
  }
  while (true) {
    out.push_back(f);
    std::size_t k = n;
    while (k > 0 && f[k - 1] == m - 1) f[--k] = 0;
    if (k == 0) break;
    ++f[k - 1];
  }
  return out;
}

}  // namespace oracle
