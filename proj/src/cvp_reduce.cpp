#include "mtlpc/cvp_reduce.hpp"

#include <set>
#include <stdexcept>

#include "mtlpc/dp_eval.hpp"
#include "mtlpc/error.hpp"

namespace mtlpc {

LayeredCircuit normalize(const LayeredCircuit& c) {
  LayeredCircuit out = c;
  for (std::size_t l = 1; l < out.layers.size(); ++l) attach_constants(out, l);
  return out;
}

Pruned prune_to_output(const LayeredCircuit& c) {
  const std::size_t depth = c.layers.size();
  std::vector<std::vector<char>> live(depth);
  for (std::size_t l = 0; l < depth; ++l) live[l].assign(c.layers[l].size(), 0);
  live[depth - 1].at(c.output) = 1;
  for (std::size_t l = depth; l-- > 1;) {
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      if (!live[l][j]) continue;
      for (const GateRef& p : c.layers[l][j].preds) live[p.layer][p.index] = 1;
    }
  }
  Pruned out;
  out.kept.resize(depth);
  std::vector<std::vector<std::size_t>> index(depth);
  out.circuit.layers.resize(depth);
  for (std::size_t l = 0; l < depth; ++l) {
    index[l].assign(c.layers[l].size(), 0);
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      if (!live[l][j]) continue;
      index[l][j] = out.kept[l].size();
      out.kept[l].push_back(j);
      Gate g = c.layers[l][j];
      for (GateRef& p : g.preds) p.index = index[p.layer][p.index];
      out.circuit.layers[l].push_back(std::move(g));
    }
  }
  out.circuit.output = 0;
  return out;
}

std::vector<Wire> rightmost_path(const LayeredCircuit& c, GateRef g) {
  std::vector<Wire> down;
  for (GateRef cur = g; cur.layer > 0;) {
    const Gate& gate = c.gate(cur);
    if (gate.preds.empty()) throw std::logic_error("source gate above the input layer");
    const GateRef pred = gate.preds.back();
    down.push_back(Wire{pred, cur});
    cur = pred;
  }
  std::vector<Wire> path(down.rbegin(), down.rend());
  for (GateRef cur = g; cur.layer + 1 < c.layers.size();) {
    const Layer& above = c.layers[cur.layer + 1];
    bool found = false;
    GateRef succ;
    for (std::size_t y = above.size(); y-- > 0 && !found;) {
      for (const GateRef& p : above[y].preds) {
        if (p.index == cur.index) {
          succ = GateRef{cur.layer + 1, y};
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::logic_error("gate does not reach the top layer");
    path.push_back(Wire{cur, succ});
    cur = succ;
  }
  return path;
}

std::size_t compute_k(const LayeredCircuit& c, GateRef g) {
  std::size_t k = 0;
  for (const Wire& w : rightmost_path(c, g)) {
    const Layer& layer = c.layers[w.to.layer];
    for (std::size_t y = 0; y < layer.size(); ++y) {
      for (const GateRef& x : layer[y].preds) {
        if (x.index < w.from.index || y < w.to.index) ++k;
      }
    }
  }
  return k;
}

BlockPartition compute_blocks(const LayeredCircuit& c) {
  BlockPartition b;
  b.k.resize(c.layers.size());
  b.blocks.resize(c.layers.size());
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      const std::size_t k = compute_k(c, GateRef{l, j});
      const std::size_t lo = j == 0 ? 1 : b.k[l][j - 1] + 2;
      b.k[l].push_back(k);
      b.blocks[l].push_back(Block{lo, k + 1});
    }
  }
  if (!b.k.empty() && !b.k.front().empty()) b.length = b.k.front().back() + 1;
  return b;
}

std::vector<std::string> check_blocks(const LayeredCircuit& c, const BlockPartition& b) {
  std::vector<std::string> problems;
  const std::size_t m = c.wire_count();
  auto where = [](std::size_t l, std::size_t j) {
    return "gate (" + std::to_string(l) + "," + std::to_string(j) + ")";
  };
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    const auto& ks = b.k[l];
    for (std::size_t j = 1; j < ks.size(); ++j) {
      if (ks[j - 1] >= ks[j]) problems.push_back(where(l, j) + ": k does not increase");
    }
    if (ks.back() != b.k.front().back()) {
      problems.push_back("layer " + std::to_string(l) + " ends at a different k");
    }
    if (ks.back() > m) problems.push_back("layer " + std::to_string(l) + ": k exceeds wire count");
    std::size_t next = 1;
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const Block& v = b.blocks[l][j];
      if (v.lo != next || v.hi < v.lo) problems.push_back(where(l, j) + ": blocks do not tile");
      next = v.hi + 1;
    }
    if (next != b.length + 1) {
      problems.push_back("layer " + std::to_string(l) + " does not cover [1, N]");
    }
    if (l == 0) continue;
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      const Block& v = b.blocks[l][j];
      const auto& preds = c.layers[l][j].preds;
      if (preds.empty()) continue;
      const Block& first = b.blocks[l - 1][preds.front().index];
      const Block& last = b.blocks[l - 1][preds.back().index];
      if (v.lo < first.lo || v.hi > last.hi) {
        problems.push_back(where(l, j) + ": block leaves its predecessors' blocks");
      }
      for (const GateRef& p : preds) {
        const Block& u = b.blocks[l - 1][p.index];
        if (u.hi < v.lo || v.hi < u.lo) {
          problems.push_back(where(l, j) + ": block misses predecessor " +
                             std::to_string(p.index));
        }
      }
    }
  }
  return problems;
}

std::string chi_name(std::size_t lo, std::size_t hi) {
  return "chi_" + std::to_string(lo) + "_" + std::to_string(hi);
}

namespace {

// The chi propositions the context of `type` on `block` mentions.
std::vector<Block> chi_blocks(GateType type, Block v) {
  switch (type) {
    case GateType::One:
    case GateType::Zero:
    case GateType::Not:
      return {v};
    case GateType::Or:
    case GateType::And:
      if (v.lo == v.hi) return {};
      return {Block{v.lo + 1, v.hi}, Block{v.lo, v.hi - 1}};
    default:
      return {};
  }
}

}  // namespace

FormulaContext gate_context(GateType type, Block v) {
  if (v.lo == 0 || v.lo > v.hi) throw std::invalid_argument("gate block must be [l,r], 1 <= l <= r");
  const Formula x = Formula::hole();
  auto chi = [](std::size_t lo, std::size_t hi) { return Formula::atom(chi_name(lo, hi)); };
  switch (type) {
    case GateType::One: return FormulaContext(Formula::disj(chi(v.lo, v.hi), x));
    case GateType::Zero:
      return FormulaContext(Formula::conj(Formula::negation(chi(v.lo, v.hi)), x));
    case GateType::Id: return FormulaContext();
    case GateType::Not: return FormulaContext(Formula::exclusive(chi(v.lo, v.hi), x));
    case GateType::Or:
      // A one-cell block just reads its single predecessor cell.
      if (v.lo == v.hi) return FormulaContext();
      return FormulaContext(
          Formula::since(chi(v.lo + 1, v.hi), Formula::until(chi(v.lo, v.hi - 1), x)));
    case GateType::And:
      if (v.lo == v.hi) return FormulaContext();
      // De Morgan dual of the OR context: !(chi' S (chi'' U !X)).
      return FormulaContext(Formula::trigger(Formula::negation(chi(v.lo + 1, v.hi)),
                                             Formula::release(Formula::negation(chi(v.lo, v.hi - 1)), x)));
    case GateType::Input:
    case GateType::Xor:
      break;
  }
  throw std::invalid_argument("no gate context for " + to_string(type) + " gates");
}

Reduction reduce(const LayeredCircuit& c, const BoolVec& inputs, bool allow_not) {
  const ValidationReport report = validate(c);
  if (!report.upward_layered()) {
    std::string msg = "circuit is not upward layered";
    for (const std::string& v : report.violations) msg += "; " + v;
    throw ValidationError(msg);
  }
  for (const Layer& layer : c.layers) {
    for (const Gate& g : layer) {
      if (g.type == GateType::Xor) throw ValidationError("XOR gates cannot be reduced");
      if (g.type == GateType::Not && !allow_not) {
        throw ValidationError("circuit has NOT gates; use the xor reduction");
      }
    }
  }
  const CircuitValues values = evaluate(c, inputs);

  const LayeredCircuit norm = normalize(c);
  for (std::size_t l = 1; l < norm.layers.size(); ++l) {
    for (const Gate& g : norm.layers[l]) {
      if (g.preds.empty()) throw ValidationError("source gate above the input layer");
    }
  }
  Pruned pruned = prune_to_output(norm);
  const LayeredCircuit& circ = pruned.circuit;
  BlockPartition blocks = compute_blocks(circ);
  if (const auto problems = check_blocks(circ, blocks); !problems.empty()) {
    throw std::logic_error("block partition invariant failed: " + problems.front());
  }
  const std::size_t n = blocks.length;

  Trace::PropositionMap props;
  BoolVec r0(n);
  std::vector<int> circuit_inputs;
  for (std::size_t j = 0; j < circ.layers[0].size(); ++j) {
    const bool v = values[0][pruned.kept[0][j]] != 0;
    if (circ.layers[0][j].type == GateType::Input) circuit_inputs.push_back(v ? 1 : 0);
    const Block& b = blocks.blocks[0][j];
    for (std::size_t pos = b.lo; pos <= b.hi; ++pos) r0.set(pos, v);
  }
  props.emplace(kInputProposition, r0);

  Formula f = Formula::atom(kInputProposition);
  std::vector<Formula> stages{f};
  for (std::size_t l = 1; l < circ.layers.size(); ++l) {
    for (std::size_t j = circ.layers[l].size(); j-- > 0;) {
      const GateType type = circ.layers[l][j].type;
      const Block& b = blocks.blocks[l][j];
      for (const Block& x : chi_blocks(type, b)) props.emplace(chi_name(x.lo, x.hi), chi(x.lo, x.hi, n));
      f = gate_context(type, b).apply(f);
    }
    stages.push_back(f);
  }

  return Reduction{f,
                   Trace::untimed(n, std::move(props)),
                   std::move(pruned.circuit),
                   std::move(blocks),
                   std::move(pruned.kept),
                   BoolVec::from_bits(circuit_inputs),
                   std::move(stages)};
}

std::vector<BoolVec> layer_vectors(const Reduction& red) {
  std::vector<BoolVec> out;
  for (const Formula& f : red.stages) out.push_back(eval(red.trace, f));
  return out;
}

std::vector<std::string> check_telescoping(const Reduction& red) {
  std::vector<std::string> problems;
  const CircuitValues values = evaluate(red.circuit, red.circuit_inputs);
  const std::vector<BoolVec> rs = layer_vectors(red);
  for (std::size_t l = 0; l < red.circuit.layers.size(); ++l) {
    for (std::size_t j = 0; j < red.circuit.layers[l].size(); ++j) {
      const Block& b = red.blocks.blocks[l][j];
      for (std::size_t pos = b.lo; pos <= b.hi; ++pos) {
        if (rs[l](pos) != (values[l][j] != 0)) {
          problems.push_back("r_" + std::to_string(l) + "(" + std::to_string(pos) +
                             ") differs from gate (" + std::to_string(l) + "," +
                             std::to_string(j) + ")");
        }
      }
    }
  }
  return problems;
}

}  // namespace mtlpc
