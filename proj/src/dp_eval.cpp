#include "mtlpc/dp_eval.hpp"

#include <deque>
#include <iterator>
#include <stdexcept>

#include "mtlpc/error.hpp"

namespace mtlpc {

namespace {

// (a U_I b)(i): some j >= i with t_j - t_i in I, b(j), and a on [i, j).
BoolVec until_vec(const Trace& trace, const BoolVec& a, const BoolVec& b, const Interval& iv) {
  const std::size_t n = trace.size();
  const TickInterval in = trace.scale(iv);
  BoolVec out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (in.is_trivial()) {
        if (b(j)) {
          out.set(i, true);
          break;
        }
        if (!a(j)) break;
        continue;
      }
      const BigInt d = trace.ticks(j) - trace.ticks(i);
      if (in.past_upper(d)) break;
      if (b(j) && in.contains(d)) {
        out.set(i, true);
        break;
      }
      if (!a(j)) break;
    }
  }
  return out;
}

// (a S_I b)(i): some j <= i with t_i - t_j in I, b(j), and a on (j, i].
BoolVec since_vec(const Trace& trace, const BoolVec& a, const BoolVec& b, const Interval& iv) {
  const std::size_t n = trace.size();
  const TickInterval in = trace.scale(iv);
  BoolVec out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j >= 1; --j) {
      if (in.is_trivial()) {
        if (b(j)) {
          out.set(i, true);
          break;
        }
        if (!a(j)) break;
        continue;
      }
      const BigInt d = trace.ticks(i) - trace.ticks(j);
      if (in.past_upper(d)) break;
      if (b(j) && in.contains(d)) {
        out.set(i, true);
        break;
      }
      if (!a(j)) break;
    }
  }
  return out;
}

class Evaluator {
 public:
  explicit Evaluator(const Trace& trace) : trace_(trace), n_(trace.size()) {}

  const BoolVec& eval(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return values_[it->second];
    BoolVec v = compute(f);
    memo_.emplace(f.id(), values_.size());
    order_.push_back(f);
    values_.push_back(std::move(v));
    return values_.back();
  }

  SatTable take() {
    SatTable table;
    table.subformulae = std::move(order_);
    table.values.assign(std::make_move_iterator(values_.begin()),
                        std::make_move_iterator(values_.end()));
    return table;
  }

 private:
  BoolVec compute(const Formula& f) {
    const Interval& iv = f.interval();
    switch (f.op()) {
      case Op::True: return BoolVec(n_, true);
      case Op::False: return BoolVec(n_, false);
      case Op::Atom: return trace_.prop(f.name());
      case Op::Hole: throw std::invalid_argument("cannot evaluate a formula context");
      case Op::Not: return ~BoolVec(eval(f.lhs()));
      case Op::And: return BoolVec(eval(f.lhs())) & eval(f.rhs());
      case Op::Or: return BoolVec(eval(f.lhs())) | eval(f.rhs());
      case Op::Xor: return BoolVec(eval(f.lhs())) ^ eval(f.rhs());
      case Op::Next: {
        const BoolVec a = eval(f.lhs());
        BoolVec out(n_);
        for (std::size_t i = 1; i < n_; ++i) {
          out.set(i, a(i + 1) && trace_.difference_in(i, i + 1, iv));
        }
        return out;
      }
      case Op::Yesterday: {
        const BoolVec a = eval(f.lhs());
        BoolVec out(n_);
        for (std::size_t i = 2; i <= n_; ++i) {
          out.set(i, a(i - 1) && trace_.difference_in(i - 1, i, iv));
        }
        return out;
      }
      case Op::Until: return until_vec(trace_, eval(f.lhs()), eval(f.rhs()), iv);
      case Op::Since: return since_vec(trace_, eval(f.lhs()), eval(f.rhs()), iv);
      // a R_I b = !(!a U_I !b)
      case Op::Release: return ~until_vec(trace_, ~eval(f.lhs()), ~eval(f.rhs()), iv);
      // a T_I b = !(!a S_I !b)
      case Op::Trigger: return ~since_vec(trace_, ~eval(f.lhs()), ~eval(f.rhs()), iv);
      // F_I a = true U_I a, G_I a = !F_I !a; O and H are the past analogues.
      case Op::Eventually: return until_vec(trace_, BoolVec(n_, true), eval(f.lhs()), iv);
      case Op::Always: return ~until_vec(trace_, BoolVec(n_, true), ~eval(f.lhs()), iv);
      case Op::Once: return since_vec(trace_, BoolVec(n_, true), eval(f.lhs()), iv);
      case Op::Historically: return ~since_vec(trace_, BoolVec(n_, true), ~eval(f.lhs()), iv);
    }
    throw std::logic_error("unhandled operator");
  }

  const Trace& trace_;
  std::size_t n_;
  std::unordered_map<const FormulaNode*, std::size_t> memo_;
  std::vector<Formula> order_;
  // deque: references handed out by eval() stay valid while later entries are added
  std::deque<BoolVec> values_;
};

}  // namespace

SatTable tabulate(const Trace& trace, const Formula& f) {
  Evaluator ev(trace);
  ev.eval(f);
  return ev.take();
}

BoolVec eval(const Trace& trace, const Formula& f) {
  Evaluator ev(trace);
  return ev.eval(f);
}

bool check(const Trace& trace, const Formula& f) { return eval(trace, f)(1); }

}  // namespace mtlpc
