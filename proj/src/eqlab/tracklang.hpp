#pragma once

// A small first-order expression language over the naturals. Programs are
// functions of a single input; partiality comes from bounded loops running
// out of evaluation budget.
//
// Surface syntax (s-expressions):
//   in | <nat> | (const <nat>) | (succ p) | (pred p) | (sub p q)
//   (pair p q) | (fst p) | (snd p) | (ifz c t e) | (comp outer inner)
//   (loop body fuel)
//
// Every sub-expression except `comp`'s outer and `loop`'s body is evaluated
// on the current input. (comp f g) runs g on the input, then f on the result.
// (loop b k) starts from the input and applies b k(input) times. (sub p q) is
// truncated subtraction. Each node visited costs one step.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqlab {

using Nat = boost::multiprecision::cpp_int;

// (n + m)(n + m + 1)/2 + m.
Nat cantor_pair(const Nat& n, const Nat& m);
std::pair<Nat, Nat> cantor_unpair(const Nat& k);

std::string nat_to_string(const Nat& n);
// Decimal digits only; throws ParseError otherwise.
Nat nat_from_string(const std::string& s);

enum class Op { Const, Input, Succ, Pred, Sub, Pair, Fst, Snd, Ifz, Comp, Loop };

class Program {
 public:
  Program();  // the constant 0
  static Program constant(Nat k);
  static Program input();
  static Program succ(Program p);
  static Program pred(Program p);
  static Program sub(Program p, Program q);
  static Program pair(Program p, Program q);
  static Program fst(Program p);
  static Program snd(Program p);
  static Program ifz(Program c, Program t, Program e);
  static Program comp(Program outer, Program inner);
  static Program loop(Program body, Program fuel);

  static Program parse(const std::string& text);

  Op op() const { return node_->op; }
  const Nat& value() const { return node_->k; }
  const std::vector<Program>& args() const { return node_->args; }
  std::size_t node_count() const;
  std::string to_string() const;

  friend bool operator==(const Program& a, const Program& b);

 private:
  struct Node {
    Op op;
    Nat k;
    std::vector<Program> args;
  };
  explicit Program(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Program make(Op op, std::vector<Program> args, Nat k = 0);

  std::shared_ptr<const Node> node_;
};

struct EvalOutcome {
  enum class Kind { Value, Exhausted, Stuck };
  Kind kind = Kind::Exhausted;
  Nat value = 0;
  std::size_t steps = 0;

  bool is_value() const { return kind == Kind::Value; }
};

// budget must be positive.
EvalOutcome eval(const Program& p, const Nat& input, std::size_t budget);

// A balanced decision tree over the inputs. Throws InvalidArgument on a
// conflicting table; the result is checked against the table before return.
Program synthesize_table_tracker(std::vector<std::pair<Nat, Nat>> io);

// Enough budget for any tracker synthesized from a table of this size.
std::size_t table_tracker_budget(std::size_t entries);

}  // namespace eqlab
