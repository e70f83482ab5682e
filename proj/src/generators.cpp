#include "mtlpc/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace mtlpc {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  return lo + rng() % span;
}

bool chance(Rng& rng, unsigned percent) { return uniform(rng, 0, 99) < percent; }

Trace random_trace(Rng& rng, const TraceParams& params) {
  const std::size_t n = std::max<std::size_t>(params.length, 1);
  Trace::PropositionMap props;
  for (const std::string& name : params.propositions) {
    BoolVec v(n);
    for (std::size_t i = 1; i <= n; ++i) v.set(i, chance(rng, params.density));
    props.emplace(name, std::move(v));
  }
  if (params.max_step == 0) return Trace::untimed(n, std::move(props));

  // Timestamps are counted in halves so that every value is an exact decimal.
  std::vector<std::string> stamps;
  std::uint64_t halves = uniform(rng, 0, 2 * params.max_step);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) halves += uniform(rng, 1, 2 * params.max_step);
    stamps.push_back(std::to_string(halves / 2) + (halves % 2 ? ".5" : ""));
  }
  return Trace(stamps, std::move(props));
}

namespace {

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const FormulaParams& p) : rng_(rng), p_(p) {
    if (p.atoms.empty()) throw std::invalid_argument("formula generator needs atoms");
    const Fragment f = p.fragment;
    xor_ = f == Fragment::MTL_XOR || f == Fragment::LTL_XOR || is_unary_fragment(f);
    binary_temporal_ = !is_unary_fragment(f);
    timed_ = f == Fragment::MTL || f == Fragment::MTL_XOR;
    lower_bounded_ = timed_ || f == Fragment::UTL_GEQ;
  }

  Formula make(std::size_t budget) {
    if (budget <= 1 || chance(rng_, 20)) return leaf();
    const bool binary = budget >= 3 && chance(rng_, 55);
    if (binary) {
      const std::size_t left = uniform(rng_, 1, budget - 2);
      Formula a = make(left);
      Formula b = make(budget - 1 - left);
      std::vector<Op> ops = {Op::And, Op::Or};
      if (xor_) ops.push_back(Op::Xor);
      if (binary_temporal_) {
        for (Op op : {Op::Until, Op::Since, Op::Release, Op::Trigger}) {
          ops.push_back(op);
          ops.push_back(op);
        }
      }
      const Op op = ops[uniform(rng_, 0, ops.size() - 1)];
      if (!is_temporal(op)) return Formula::binary(op, a, b);
      return Formula::binary(op, a, b, temporal_interval(op));
    }
    const Op ops[] = {Op::Not,        Op::Next,   Op::Yesterday, Op::Eventually,
                      Op::Always,     Op::Once,   Op::Historically};
    const Op op = ops[uniform(rng_, 0, std::size(ops) - 1)];
    Formula a = make(budget - 1);
    if (op == Op::Not) return Formula::negation(a);
    return Formula::unary(op, a, temporal_interval(op));
  }

 private:
  Formula leaf() {
    if (chance(rng_, 5)) return chance(rng_, 50) ? Formula::top() : Formula::bottom();
    return Formula::atom(p_.atoms[uniform(rng_, 0, p_.atoms.size() - 1)]);
  }

  Interval temporal_interval(Op op) {
    const bool unary_fg = op == Op::Eventually || op == Op::Always || op == Op::Once ||
                          op == Op::Historically;
    if (chance(rng_, 50)) return Interval{};
    if (timed_) {
      const std::uint64_t lo = uniform(rng_, 0, p_.max_bound);
      const bool lo_closed = chance(rng_, 70);
      if (chance(rng_, 25)) return Interval::at_least(lo, lo_closed);
      const std::uint64_t hi = lo + uniform(rng_, 0, p_.max_bound);
      if (hi == lo) return Interval::make(lo, hi);
      return Interval::make(lo, hi, lo_closed, chance(rng_, 70));
    }
    if (lower_bounded_ && unary_fg) {
      return Interval::at_least(uniform(rng_, 1, std::max(1u, p_.max_bound)), chance(rng_, 70));
    }
    return Interval{};
  }

  Rng& rng_;
  const FormulaParams& p_;
  bool xor_ = false;
  bool binary_temporal_ = false;
  bool timed_ = false;
  bool lower_bounded_ = false;
};

}  // namespace

Formula random_formula(Rng& rng, const FormulaParams& params) {
  FormulaGen gen(rng, params);
  return gen.make(std::max<std::size_t>(params.size, 1));
}

BoolVec random_inputs(Rng& rng, std::size_t count) {
  BoolVec v(count);
  for (std::size_t i = 1; i <= count; ++i) v.set(i, chance(rng, 50));
  return v;
}

LayeredCircuit random_circuit(Rng& rng, const CircuitParams& params) {
  const std::size_t depth = std::max<std::size_t>(params.layers, 2);
  const std::size_t max_width = std::max<std::size_t>(params.max_width, 1);
  LayeredCircuit c;
  c.layers.resize(depth);
  const std::size_t inputs = uniform(rng, 1, max_width);
  for (std::size_t j = 0; j < inputs; ++j) c.layers[0].push_back(Gate{GateType::Input, {}});

  for (std::size_t l = 1; l < depth; ++l) {
    const std::size_t below = c.layers[l - 1].size();
    const std::size_t width = l + 1 == depth ? 1 : uniform(rng, 1, max_width);
    std::size_t cursor = 0;
    for (std::size_t j = 0; j < width; ++j) {
      const bool top = l + 1 == depth;
      if (!top && chance(rng, params.const_percent)) {
        c.layers[l].push_back(Gate{chance(rng, 50) ? GateType::One : GateType::Zero, {}});
        continue;
      }
      // Blocks may share an endpoint with the previous block but never overlap more.
      std::size_t lo = std::min(cursor + (cursor > 0 && chance(rng, 60) ? 1 : 0), below - 1);
      if (top) lo = uniform(rng, 0, below - 1);
      const std::size_t room = below - lo;
      const std::size_t len = top ? uniform(rng, 1, room) : uniform(rng, 1, std::min<std::size_t>(room, 3));
      Gate g;
      for (std::size_t k = lo; k < lo + len; ++k) g.preds.push_back(GateRef{l - 1, k});
      cursor = lo + len - 1;
      if (len == 1) {
        if (chance(rng, params.not_percent)) {
          g.type = GateType::Not;
        } else {
          const GateType unary[] = {GateType::Id, GateType::Or, GateType::And};
          g.type = unary[uniform(rng, 0, 2)];
        }
      } else {
        g.type = chance(rng, 50) ? GateType::Or : GateType::And;
      }
      c.layers[l].push_back(std::move(g));
    }
  }
  c.output = 0;
  return c;
}

}  // namespace mtlpc
