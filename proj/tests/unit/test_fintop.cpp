#include <doctest.h>

#include <random>

#include "eqlab/error.hpp"
#include "eqlab/fintop.hpp"
#include "oracle.hpp"

using namespace eqlab;

namespace {

// Random preorders via random relations closed transitively.
FinSpace random_space(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = x == y || coin(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (leq[x * n + k] && leq[k * n + y]) leq[x * n + y] = 1;
      }
    }
  }
  return FinSpace::from_order(n, leq);
}

}  // namespace

TEST_CASE("sierpinski opens and separation") {
  auto s = FinSpace::sierpinski();
  CHECK(s.opens() == std::vector<std::vector<Point>>{{}, {1}, {0, 1}});
  CHECK(is_T0(s));
  CHECK_FALSE(is_T0(FinSpace::indiscrete(2)));
  CHECK(is_T0(FinSpace::discrete(3)));
}

TEST_CASE("explicit open lists are validated, not completed") {
  CHECK_THROWS_AS(FinSpace::from_opens(2, {{}, {0}}), InvalidArgument);          // whole space missing
  CHECK_THROWS_AS(FinSpace::from_opens(3, {{}, {0}, {1}, {0, 1, 2}}), InvalidArgument);  // {0,1} missing
  CHECK_THROWS_AS(FinSpace::from_opens(2, {{}, {0, 1}, {2}}), InvalidArgument);  // point out of range
  auto s = FinSpace::from_opens(2, {{}, {1}, {0, 1}});
  CHECK(s == FinSpace::sierpinski());
}

TEST_CASE("continuity examples") {
  auto s = FinSpace::sierpinski();
  CHECK(is_continuous({s, s, PointMap::identity(2)}));
  CHECK_FALSE(is_continuous({s, s, PointMap({1, 0}, 2)}));
  auto d3 = FinSpace::discrete(3);
  for (Point v = 0; v < 2; ++v) {
    CHECK(is_continuous({s, s, PointMap::constant(2, 2, v)}));
    CHECK(is_continuous({d3, s, PointMap::constant(3, 2, v)}));
    CHECK(is_continuous({FinSpace::indiscrete(3), s, PointMap::constant(3, 2, v)}));
  }
}

TEST_CASE("continuity agrees with the preimage oracle") {
  std::mt19937 rng(7);
  for (int round = 0; round < 30; ++round) {
    auto a = random_space(rng, 1 + round % 4);
    auto b = random_space(rng, 1 + (round / 4) % 4);
    auto oa = oracle::from_space(a), ob = oracle::from_space(b);
    for (const auto& f : oracle::all_functions(a.size(), b.size())) {
      CHECK(is_continuous({a, b, PointMap(f, b.size())}) == oracle::continuous(oa, ob, f));
    }
  }
}

TEST_CASE("sierpinski squared") {
  auto s = FinSpace::sierpinski();
  auto p = product_space(s, s);
  CHECK(p.space.size() == 4);
  // The rectangle-union oracle gives 6 opens: the up-sets of the product order.
  auto expected = oracle::product(oracle::from_space(s), oracle::from_space(s));
  CHECK(expected.opens.size() == 6);
  CHECK(oracle::from_space(p.space).opens == expected.opens);

  auto diag = subspace(p.space, {0, 3});
  CHECK(diag.space == s);
  CHECK(oracle::from_space(diag.space).opens == oracle::trace(expected, {0, 3}).opens);
}

TEST_CASE("product units and discrete products") {
  auto s = FinSpace::sierpinski();
  CHECK(product_space(s, FinSpace::point()).space == s);
  CHECK(product_space(FinSpace::discrete(2), FinSpace::discrete(2)).space == FinSpace::discrete(4));
}

TEST_CASE("products agree with the rectangle oracle and pair continuous maps") {
  std::mt19937 rng(11);
  for (int round = 0; round < 25; ++round) {
    auto a = random_space(rng, 1 + round % 3);
    auto b = random_space(rng, 1 + (round / 3) % 3);
    auto p = product_space(a, b);
    CHECK(oracle::from_space(p.space).opens ==
          oracle::product(oracle::from_space(a), oracle::from_space(b)).opens);
    CHECK(is_continuous({p.space, a, p.proj1}));
    CHECK(is_continuous({p.space, b, p.proj2}));
    auto w = random_space(rng, 2);
    for (const auto& f : hom_set<FinTop>(w, a)) {
      for (const auto& g : hom_set<FinTop>(w, b)) CHECK(is_continuous({w, p.space, pair_maps(f, g)}));
    }
  }
}

TEST_CASE("subspaces") {
  auto s = FinSpace::sierpinski();
  CHECK(subspace(s, {0, 1}).space == s);
  CHECK(subspace(s, {1}).space == FinSpace::point());
  auto sub = subspace(s, {1});
  CHECK(is_subspace_inclusion({sub.space, s, sub.inclusion}));
  CHECK_FALSE(is_subspace_inclusion({FinSpace::discrete(2), FinSpace::indiscrete(2), PointMap::identity(2)}));
  CHECK_FALSE(is_subspace_inclusion({FinSpace::discrete(2), FinSpace::point(), PointMap::constant(2, 1, 0)}));

  std::mt19937 rng(3);
  for (int round = 0; round < 40; ++round) {
    auto x = random_space(rng, 5);
    std::vector<Point> subset;
    for (Point p = 0; p < 5; ++p) {
      if (rng() % 2) subset.push_back(p);
    }
    auto t = subspace(x, subset);
    CHECK(oracle::from_space(t.space).opens == oracle::trace(oracle::from_space(x), subset).opens);
    if (is_T0(x)) CHECK(is_T0(t.space));
  }
}

TEST_CASE("T0 agrees with the separation oracle") {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    auto x = random_space(rng, 1 + round % 5);
    CHECK(is_T0(x) == oracle::t0(oracle::from_space(x)));
  }
}
