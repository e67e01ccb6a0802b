#include <doctest.h>

#include <random>

#include "eqlab/error.hpp"
#include "eqlab/tracklang.hpp"

using namespace eqlab;

namespace {

Nat value_of(const Program& p, const Nat& n, std::size_t budget = 1000) {
  auto r = eval(p, n, budget);
  REQUIRE(r.is_value());
  return r.value;
}

}  // namespace

TEST_CASE("basic programs") {
  CHECK(value_of(Program::input(), 7) == 7);
  CHECK(value_of(Program::succ(Program::succ(Program::input())), 0) == 2);
  CHECK(value_of(Program::parse("(comp (succ in) (succ in))"), 0) == 2);
  CHECK(value_of(Program::pred(Program::input()), 0) == 0);
  CHECK(value_of(Program::parse("(sub in 10)"), 4) == 0);
  CHECK(value_of(Program::parse("(sub in 10)"), 14) == 4);
  CHECK(value_of(Program::parse("(ifz in 5 6)"), 0) == 5);
  CHECK(value_of(Program::parse("(ifz in 5 6)"), 3) == 6);
}

TEST_CASE("a decrementing loop exhausts small budgets") {
  auto countdown = Program::parse("(loop (pred in) in)");
  // Steps: loop node, fuel `in`, then (pred, in) per iteration: 2 + 2 * 10 = 22.
  auto low = eval(countdown, 10, 5);
  CHECK(low.kind == EvalOutcome::Kind::Exhausted);
  auto high = eval(countdown, 10, 100);
  REQUIRE(high.is_value());
  CHECK(high.value == 0);
  CHECK(high.steps == 22);
  CHECK(eval(countdown, 10, 21).kind == EvalOutcome::Kind::Exhausted);
  CHECK(eval(countdown, 10, 22).is_value());
  CHECK_THROWS_AS(eval(countdown, 10, 0), InvalidArgument);
}

TEST_CASE("budget monotonicity") {
  std::vector<Program> programs{Program::parse("(loop (succ (succ in)) (fst in))"),
                                Program::parse("(pair (snd in) (loop (pred in) in))"),
                                Program::parse("(ifz (sub in 3) (const 9) (loop (succ in) in))")};
  for (const auto& p : programs) {
    for (int n = 0; n < 30; ++n) {
      std::optional<Nat> first;
      for (std::size_t b = 1; b < 200; ++b) {
        auto r = eval(p, n, b);
        if (first) {
          REQUIRE(r.is_value());
          CHECK(r.value == *first);
        } else if (r.is_value()) {
          first = r.value;
        }
      }
      CHECK(first.has_value());
    }
  }
}

TEST_CASE("cantor pairing") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 2) == (3 * 4) / 2 + 2);
  CHECK(cantor_pair(1, 2) == 8);
  for (int k = 0; k <= 10000; ++k) {
    auto [n, m] = cantor_unpair(k);
    CHECK(cantor_pair(n, m) == k);
  }
  for (int n = 0; n < 60; ++n) {
    for (int m = 0; m < 60; ++m) {
      auto [a, b] = cantor_unpair(cantor_pair(n, m));
      CHECK(a == n);
      CHECK(b == m);
      CHECK(cantor_pair(n + 1, m) > cantor_pair(n, m));
      CHECK(cantor_pair(n, m + 1) > cantor_pair(n, m));
    }
  }
  Nat big = Nat(1) << 300;
  auto [x, y] = cantor_unpair(cantor_pair(big, big + 5));
  CHECK(x == big);
  CHECK(y == big + 5);
  CHECK(value_of(Program::parse("(pair (fst in) (snd in))"), 12345) == 12345);
}

TEST_CASE("syntax round-trips and rejects malformed input") {
  for (const char* text : {"in", "7", "(succ in)", "(pair (fst in) (const 3))", "(ifz (sub (succ in) 4) 1 2)",
                           "(comp (loop (pred in) in) (snd in))"}) {
    auto p = Program::parse(text);
    CHECK(Program::parse(p.to_string()) == p);
  }
  CHECK(Program::parse("(const 12)").to_string() == "12");
  for (const char* bad : {"", "(", "(succ)", "(succ in in)", "(frob in)", "in)", "-3", "(const x)"}) {
    CHECK_THROWS_AS(Program::parse(bad), ParseError);
  }
}

TEST_CASE("table trackers") {
  auto empty = synthesize_table_tracker({});
  CHECK(value_of(empty, 42) == 0);

  auto single = synthesize_table_tracker({{5, 9}});
  CHECK(value_of(single, 5, table_tracker_budget(1)) == 9);

  auto two = synthesize_table_tracker({{0, 1}, {3, 0}});
  CHECK(value_of(two, 0, table_tracker_budget(2)) == 1);
  CHECK(value_of(two, 3, table_tracker_budget(2)) == 0);

  CHECK_THROWS_AS(synthesize_table_tracker({{1, 2}, {1, 3}}), InvalidArgument);

  std::mt19937 rng(99);
  for (int round = 0; round < 50; ++round) {
    std::map<Nat, Nat> table;
    std::size_t size = 1 + rng() % 40;
    while (table.size() < size) table[Nat(rng() % 1000) << (rng() % 200)] = rng() % 17;
    std::vector<std::pair<Nat, Nat>> io(table.begin(), table.end());
    auto p = synthesize_table_tracker(io);
    for (const auto& [in, out] : io) CHECK(value_of(p, in, table_tracker_budget(io.size())) == out);
    CHECK(table_tracker_budget(io.size()) <= 5 * io.size() + 1);
  }
}
