#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/circuit.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/interval.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

/// Operator tags of contraction-tree nodes. WeakNext/WeakYesterday only arise
/// from pushing negation through X and Y (not X a == WeakNext not a).
enum class NodeOp {
  Leaf,
  Not,
  And,
  Or,
  Xor,
  Next,
  Yesterday,
  WeakNext,
  WeakYesterday,
  Eventually,
  Always,
  Once,
  Historically,
  Until,
  Since,
  Release,
  Trigger,
};

const char* to_string(NodeOp op);

struct TreeNode {
  NodeOp op = NodeOp::Leaf;
  Interval interval;
  std::size_t parent = kNoNode;
  std::size_t left = kNoNode;   ///< only child of a unary node
  std::size_t right = kNoNode;
  BoolVec value;                ///< leaves only

  bool is_leaf() const { return op == NodeOp::Leaf; }
  bool is_unary() const { return !is_leaf() && right == kNoNode; }
};

struct ContractionTree {
  std::vector<TreeNode> nodes;
  std::size_t root = kNoNode;

  std::size_t leaf_count() const;
};

/// Leaves hold the truth vectors of atoms and constants. With
/// `negation_normal_form`, negations are pushed to the atoms (and folded into
/// their leaf vectors) using the temporal dualities; otherwise Not nodes stay.
ContractionTree build_tree(const Trace& trace, const Formula& f, bool negation_normal_form);

enum class StepKind { FoldUnary, Rake };

struct Step {
  StepKind kind = StepKind::Rake;
  // Rake: the triple (leaf, parent, sibling).
  std::size_t leaf = kNoNode;
  std::size_t parent = kNoNode;
  std::size_t sibling = kNoNode;
  bool leaf_is_left = true;
  // FoldUnary: a maximal chain of unary nodes, top first, over `bottom`.
  std::vector<std::size_t> chain;
  std::size_t bottom = kNoNode;
};

using Round = std::vector<Step>;

struct Schedule {
  std::vector<Round> rounds;
  std::size_t final_node = kNoNode;
};

/// One folding round for unary chains, then the odd-left / odd-right rake
/// rounds over the leaves numbered left to right (leftmost and rightmost
/// excluded), then the last rake at the root. Throws std::logic_error if two
/// steps of a round share a node.
Schedule schedule_rounds(const ContractionTree& tree);

/// 2 * ceil(log2 L) + 2.
std::size_t round_bound(std::size_t leaves);

namespace detail {

template <class Body>
void parallel_for(std::size_t count, unsigned workers, const Body& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        body(k);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t spawn = std::min<std::size_t>(workers, count) - 1;
  for (std::size_t w = 0; w < spawn; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Runs `schedule` over `tree`. A Policy supplies
///   Function partial(const TreeNode& p, bool constant_on_left, const BoolVec& c)
///   Function unary(const TreeNode& u)
///   Function compose(const Function& outer, const Function& inner)
///   BoolVec apply(const Function& f, const BoolVec& x)
/// Identity functions are represented by an empty optional. Steps of a round
/// touch disjoint nodes and write only to their sibling (or bottom) node.
template <class Policy>
BoolVec contract(const ContractionTree& tree, const Schedule& schedule, const Policy& policy,
                 unsigned workers) {
  using Function = typename Policy::Function;
  const std::size_t count = tree.nodes.size();
  std::vector<BoolVec> value(count);
  std::vector<std::optional<Function>> fn(count);
  for (std::size_t v = 0; v < count; ++v) {
    if (tree.nodes[v].is_leaf()) value[v] = tree.nodes[v].value;
  }

  auto then = [&](const std::optional<Function>& outer, Function inner) -> Function {
    return outer ? policy.compose(*outer, inner) : std::move(inner);
  };

  for (const Round& round : schedule.rounds) {
    detail::parallel_for(round.size(), workers, [&](std::size_t k) {
      const Step& st = round[k];
      if (st.kind == StepKind::FoldUnary) {
        std::optional<Function> chain;
        for (auto it = st.chain.rbegin(); it != st.chain.rend(); ++it) {
          Function u = policy.unary(tree.nodes[*it]);
          chain = chain ? policy.compose(u, *chain) : std::move(u);
        }
        if (tree.nodes[st.bottom].is_leaf()) {
          value[st.bottom] = policy.apply(*chain, value[st.bottom]);
        } else {
          fn[st.bottom] = fn[st.bottom] ? policy.compose(*chain, *fn[st.bottom]) : *chain;
        }
        return;
      }
      Function partial = policy.partial(tree.nodes[st.parent], st.leaf_is_left, value[st.leaf]);
      Function outer = then(fn[st.parent], std::move(partial));
      if (tree.nodes[st.sibling].is_leaf()) {
        value[st.sibling] = policy.apply(outer, value[st.sibling]);
      } else if (fn[st.sibling]) {
        fn[st.sibling] = policy.compose(outer, *fn[st.sibling]);
      } else {
        fn[st.sibling] = std::move(outer);
      }
    });
  }
  return value.at(schedule.final_node);
}

struct ContractionOptions {
  unsigned workers = 1;
  /// Sees every transducer the engine builds or composes. Called from worker
  /// threads when workers > 1.
  std::function<void(const TransducerCircuit&)> observer;
  /// Applied to each freshly built transducer before use (fault injection).
  std::function<void(TransducerCircuit&)> mutate;
};

struct ContractionStats {
  std::size_t leaves = 0;
  std::size_t rounds = 0;
};

/// Truth vector of `f` computed by tree contraction with transducer circuits.
BoolVec run_mtl(const Trace& trace, const Formula& f, const ContractionOptions& options = {},
                ContractionStats* stats = nullptr);

}  // namespace mtlpc
