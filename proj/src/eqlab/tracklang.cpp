#include "eqlab/tracklang.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eqlab/error.hpp"

namespace eqlab {

Nat cantor_pair(const Nat& n, const Nat& m) {
  Nat s = n + m;
  return s * (s + 1) / 2 + m;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& k) {
  if (k < 0) throw InvalidArgument("cantor_unpair of a negative number");
  Nat w = (boost::multiprecision::sqrt(Nat(8 * k + 1)) - 1) / 2;
  Nat m = k - w * (w + 1) / 2;
  return {w - m, m};
}

std::string nat_to_string(const Nat& n) { return n.str(); }

Nat nat_from_string(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("not a natural number: '" + s + "'");
  }
  return Nat(s);
}

Program Program::make(Op op, std::vector<Program> args, Nat k) {
  return Program(std::make_shared<const Node>(Node{op, std::move(k), std::move(args)}));
}

Program::Program() : node_(make(Op::Const, {}, 0).node_) {}

Program Program::constant(Nat k) {
  if (k < 0) throw InvalidArgument("negative constant");
  return make(Op::Const, {}, std::move(k));
}
Program Program::input() { return make(Op::Input, {}); }
Program Program::succ(Program p) { return make(Op::Succ, {std::move(p)}); }
Program Program::pred(Program p) { return make(Op::Pred, {std::move(p)}); }
Program Program::sub(Program p, Program q) { return make(Op::Sub, {std::move(p), std::move(q)}); }
Program Program::pair(Program p, Program q) { return make(Op::Pair, {std::move(p), std::move(q)}); }
Program Program::fst(Program p) { return make(Op::Fst, {std::move(p)}); }
Program Program::snd(Program p) { return make(Op::Snd, {std::move(p)}); }
Program Program::ifz(Program c, Program t, Program e) {
  return make(Op::Ifz, {std::move(c), std::move(t), std::move(e)});
}
Program Program::comp(Program outer, Program inner) {
  return make(Op::Comp, {std::move(outer), std::move(inner)});
}
Program Program::loop(Program body, Program fuel) {
  return make(Op::Loop, {std::move(body), std::move(fuel)});
}

std::size_t Program::node_count() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.node_count();
  return n;
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.value() != b.value() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!(a.args()[i] == b.args()[i])) return false;
  }
  return true;
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Input: return "in";
    case Op::Succ: return "succ";
    case Op::Pred: return "pred";
    case Op::Sub: return "sub";
    case Op::Pair: return "pair";
    case Op::Fst: return "fst";
    case Op::Snd: return "snd";
    case Op::Ifz: return "ifz";
    case Op::Comp: return "comp";
    case Op::Loop: return "loop";
  }
  return "?";
}

void print(const Program& p, std::ostream& out) {
  if (p.op() == Op::Input) {
    out << "in";
    return;
  }
  if (p.op() == Op::Const) {
    out << p.value().str();
    return;
  }
  out << '(' << op_name(p.op());
  for (const auto& a : p.args()) {
    out << ' ';
    print(a, out);
  }
  out << ')';
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Program parse_all() {
    Program p = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("program syntax at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected an atom");
    return s_.substr(start, pos_ - start);
  }

  Program parse_expr() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == ')') fail("unexpected ')'");
    if (s_[pos_] != '(') {
      std::string a = atom();
      if (a == "in") return Program::input();
      return Program::constant(nat_from_string(a));
    }
    ++pos_;
    std::string head = atom();
    Program result = Program::input();
    if (head == "const") {
      result = Program::constant(nat_from_string(atom()));
    } else {
      static const std::vector<std::pair<std::string, std::size_t>> arity = {
          {"succ", 1}, {"pred", 1}, {"sub", 2}, {"pair", 2}, {"fst", 1},
          {"snd", 1},  {"ifz", 3},  {"comp", 2}, {"loop", 2}};
      auto it = std::find_if(arity.begin(), arity.end(), [&](const auto& e) { return e.first == head; });
      if (it == arity.end()) fail("unknown operator '" + head + "'");
      std::vector<Program> args;
      for (std::size_t i = 0; i < it->second; ++i) args.push_back(parse_expr());
      if (head == "succ") result = Program::succ(args[0]);
      else if (head == "pred") result = Program::pred(args[0]);
      else if (head == "sub") result = Program::sub(args[0], args[1]);
      else if (head == "pair") result = Program::pair(args[0], args[1]);
      else if (head == "fst") result = Program::fst(args[0]);
      else if (head == "snd") result = Program::snd(args[0]);
      else if (head == "ifz") result = Program::ifz(args[0], args[1], args[2]);
      else if (head == "comp") result = Program::comp(args[0], args[1]);
      else result = Program::loop(args[0], args[1]);
    }
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')' after " + head);
    ++pos_;
    return result;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Evaluator {
  std::size_t budget;
  std::size_t steps = 0;
  bool exhausted = false;

  bool tick() {
    if (steps == budget) {
      exhausted = true;
      return false;
    }
    ++steps;
    return true;
  }

  // Returns 0 once exhausted; callers check the flag.
  Nat run(const Program& p, const Nat& in) {
    if (!tick()) return 0;
    const auto& a = p.args();
    switch (p.op()) {
      case Op::Const: return p.value();
      case Op::Input: return in;
      case Op::Succ: return run(a[0], in) + 1;
      case Op::Pred: {
        Nat v = run(a[0], in);
        return v == 0 ? v : Nat(v - 1);
      }
      case Op::Sub: {
        Nat x = run(a[0], in);
        if (exhausted) return 0;
        Nat y = run(a[1], in);
        return x > y ? Nat(x - y) : Nat(0);
      }
      case Op::Pair: {
        Nat x = run(a[0], in);
        if (exhausted) return 0;
        return cantor_pair(x, run(a[1], in));
      }
      case Op::Fst: return cantor_unpair(run(a[0], in)).first;
      case Op::Snd: return cantor_unpair(run(a[0], in)).second;
      case Op::Ifz: {
        Nat c = run(a[0], in);
        if (exhausted) return 0;
        return run(c == 0 ? a[1] : a[2], in);
      }
      case Op::Comp: {
        Nat mid = run(a[1], in);
        if (exhausted) return 0;
        return run(a[0], mid);
      }
      case Op::Loop: {
        Nat fuel = run(a[1], in);
        Nat state = in;
        for (Nat i = 0; i < fuel && !exhausted; ++i) state = run(a[0], state);
        return exhausted ? Nat(0) : state;
      }
    }
    return 0;
  }
};

}  // namespace

std::string Program::to_string() const {
  std::ostringstream out;
  print(*this, out);
  return out.str();
}

Program Program::parse(const std::string& text) { return Parser(text).parse_all(); }

EvalOutcome eval(const Program& p, const Nat& input, std::size_t budget) {
  if (budget == 0) throw InvalidArgument("evaluation budget must be positive");
  if (input < 0) throw InvalidArgument("negative input");
  Evaluator ev{budget};
  Nat v = ev.run(p, input);
  EvalOutcome out;
  out.steps = ev.steps;
  if (ev.exhausted) {
    out.kind = EvalOutcome::Kind::Exhausted;
  } else {
    out.kind = EvalOutcome::Kind::Value;
    out.value = std::move(v);
  }
  return out;
}

namespace {

using Table = std::vector<std::pair<Nat, Nat>>;

// Entries [lo, hi) are sorted by input and nonempty.
Program decide(const Table& t, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return Program::constant(t[lo].second);
  std::size_t mid = lo + (hi - lo) / 2;
  // in < t[mid].first  iff  (in + 1) - t[mid].first = 0 under truncation.
  Program test = Program::sub(Program::succ(Program::input()), Program::constant(t[mid].first));
  return Program::ifz(test, decide(t, lo, mid), decide(t, mid, hi));
}

std::size_t depth_for(std::size_t n) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  return d;
}

}  // namespace

std::size_t table_tracker_budget(std::size_t entries) {
  // Five nodes per decision level plus the leaf.
  return 5 * depth_for(entries) + 1;
}

Program synthesize_table_tracker(std::vector<std::pair<Nat, Nat>> io) {
  std::sort(io.begin(), io.end());
  io.erase(std::unique(io.begin(), io.end()), io.end());
  for (std::size_t i = 1; i < io.size(); ++i) {
    if (io[i].first == io[i - 1].first) {
      throw InvalidArgument("conflicting table: input " + io[i].first.str() + " maps to " +
                            io[i - 1].second.str() + " and " + io[i].second.str());
    }
  }
  if (io.empty()) return Program::constant(0);
  Program p = decide(io, 0, io.size());
  const std::size_t budget = table_tracker_budget(io.size());
  for (const auto& [in, out] : io) {
    auto r = eval(p, in, budget);
    if (!r.is_value() || r.value != out) {
      throw InternalInvariant("synthesized tracker disagrees with its table at input " + in.str());
    }
  }
  return p;
}

}  // namespace eqlab
