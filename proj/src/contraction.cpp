#include "mtlpc/contraction.hpp"

#include <algorithm>
#include <string>

#include "mtlpc/transducers.hpp"

namespace mtlpc {

const char* to_string(NodeOp op) {
  switch (op) {
    case NodeOp::Leaf: return "leaf";
    case NodeOp::Not: return "not";
    case NodeOp::And: return "and";
    case NodeOp::Or: return "or";
    case NodeOp::Xor: return "xor";
    case NodeOp::Next: return "X";
    case NodeOp::Yesterday: return "Y";
    case NodeOp::WeakNext: return "weak X";
    case NodeOp::WeakYesterday: return "weak Y";
    case NodeOp::Eventually: return "F";
    case NodeOp::Always: return "G";
    case NodeOp::Once: return "O";
    case NodeOp::Historically: return "H";
    case NodeOp::Until: return "U";
    case NodeOp::Since: return "S";
    case NodeOp::Release: return "R";
    case NodeOp::Trigger: return "T";
  }
  return "?";
}

std::size_t ContractionTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

namespace {

NodeOp node_op(Op op) {
  switch (op) {
    case Op::Not: return NodeOp::Not;
    case Op::And: return NodeOp::And;
    case Op::Or: return NodeOp::Or;
    case Op::Xor: return NodeOp::Xor;
    case Op::Next: return NodeOp::Next;
    case Op::Yesterday: return NodeOp::Yesterday;
    case Op::Eventually: return NodeOp::Eventually;
    case Op::Always: return NodeOp::Always;
    case Op::Once: return NodeOp::Once;
    case Op::Historically: return NodeOp::Historically;
    case Op::Until: return NodeOp::Until;
    case Op::Since: return NodeOp::Since;
    case Op::Release: return NodeOp::Release;
    case Op::Trigger: return NodeOp::Trigger;
    default: break;
  }
  throw std::logic_error("operator has no tree node");
}

// The operator equivalent to !op(!a, ...): the temporal and Boolean duals.
NodeOp dual(NodeOp op) {
  switch (op) {
    case NodeOp::And: return NodeOp::Or;
    case NodeOp::Or: return NodeOp::And;
    case NodeOp::Next: return NodeOp::WeakNext;
    case NodeOp::Yesterday: return NodeOp::WeakYesterday;
    case NodeOp::Eventually: return NodeOp::Always;
    case NodeOp::Always: return NodeOp::Eventually;
    case NodeOp::Once: return NodeOp::Historically;
    case NodeOp::Historically: return NodeOp::Once;
    case NodeOp::Until: return NodeOp::Release;
    case NodeOp::Release: return NodeOp::Until;
    case NodeOp::Since: return NodeOp::Trigger;
    case NodeOp::Trigger: return NodeOp::Since;
    default: break;
  }
  throw std::logic_error("operator has no dual");
}

class TreeBuilder {
 public:
  TreeBuilder(const Trace& trace, bool nnf) : trace_(trace), nnf_(nnf) {}

  std::size_t add(const Formula& f, bool negate) {
    const std::size_t n = trace_.size();
    switch (f.op()) {
      case Op::True:
      case Op::False:
        return leaf(BoolVec(n, (f.op() == Op::True) != negate));
      case Op::Atom:
        return leaf(negate ? ~trace_.prop(f.name()) : trace_.prop(f.name()));
      case Op::Hole:
        throw std::invalid_argument("cannot contract a formula context");
      case Op::Not:
        if (nnf_) return add(f.lhs(), !negate);
        return node(NodeOp::Not, f.interval(), {add(f.lhs(), false)});
      default:
        break;
    }
    NodeOp op = node_op(f.op());
    if (op == NodeOp::Xor) {
      // !(a xor b) == (!a) xor b
      return node(op, f.interval(), {add(f.lhs(), negate), add(f.rhs(), false)});
    }
    if (negate) op = dual(op);
    std::vector<std::size_t> kids;
    for (std::size_t c = 0; c < f.arity(); ++c) kids.push_back(add(f.child(c), negate));
    return node(op, f.interval(), kids);
  }

  ContractionTree finish(std::size_t root) {
    tree_.root = root;
    return std::move(tree_);
  }

 private:
  std::size_t leaf(BoolVec v) {
    TreeNode t;
    t.value = std::move(v);
    tree_.nodes.push_back(std::move(t));
    return tree_.nodes.size() - 1;
  }

  std::size_t node(NodeOp op, const Interval& interval, const std::vector<std::size_t>& kids) {
    TreeNode t;
    t.op = op;
    t.interval = interval;
    t.left = kids.at(0);
    if (kids.size() > 1) t.right = kids[1];
    tree_.nodes.push_back(std::move(t));
    const std::size_t id = tree_.nodes.size() - 1;
    for (std::size_t k : kids) tree_.nodes[k].parent = id;
    return id;
  }

  const Trace& trace_;
  bool nnf_;
  ContractionTree tree_;
};

// Mutable shape used to simulate the contraction while scheduling.
struct Shape {
  std::vector<std::size_t> parent, left, right;
  std::size_t root = kNoNode;

  // `child` takes the place of `old` under old's parent.
  void replace(std::size_t old, std::size_t child) {
    const std::size_t g = parent[old];
    parent[child] = g;
    if (g == kNoNode) {
      root = child;
    } else if (left[g] == old) {
      left[g] = child;
    } else {
      right[g] = child;
    }
  }
};

void check_disjoint(const Round& round, std::size_t node_count) {
  std::vector<char> used(node_count, 0);
  auto claim = [&](std::size_t v) {
    if (used[v]) throw std::logic_error("contraction round touches node " + std::to_string(v) +
                                        " twice");
    used[v] = 1;
  };
  for (const Step& st : round) {
    if (st.kind == StepKind::FoldUnary) {
      for (std::size_t v : st.chain) claim(v);
      claim(st.bottom);
    } else {
      claim(st.leaf);
      claim(st.parent);
      claim(st.sibling);
    }
  }
}

}  // namespace

ContractionTree build_tree(const Trace& trace, const Formula& f, bool negation_normal_form) {
  TreeBuilder b(trace, negation_normal_form);
  const std::size_t root = b.add(f, false);
  return b.finish(root);
}

std::size_t round_bound(std::size_t leaves) {
  std::size_t log = 0;
  while ((std::size_t{1} << log) < leaves) ++log;
  return 2 * log + 2;
}

Schedule schedule_rounds(const ContractionTree& tree) {
  const std::size_t count = tree.nodes.size();
  Shape sh;
  sh.root = tree.root;
  for (const TreeNode& t : tree.nodes) {
    sh.parent.push_back(t.parent);
    sh.left.push_back(t.left);
    sh.right.push_back(t.right);
  }
  Schedule sched;

  Round fold;
  for (std::size_t v = 0; v < count; ++v) {
    if (!tree.nodes[v].is_unary()) continue;
    const std::size_t up = tree.nodes[v].parent;
    if (up != kNoNode && tree.nodes[up].is_unary()) continue;
    Step st;
    st.kind = StepKind::FoldUnary;
    std::size_t w = v;
    while (tree.nodes[w].is_unary()) {
      st.chain.push_back(w);
      w = tree.nodes[w].left;
    }
    st.bottom = w;
    sh.replace(v, w);
    fold.push_back(std::move(st));
  }
  if (!fold.empty()) {
    check_disjoint(fold, count);
    sched.rounds.push_back(std::move(fold));
  }

  std::vector<std::size_t> leaves;
  for (std::vector<std::size_t> stack{sh.root}; !stack.empty();) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (sh.left[v] == kNoNode) {
      leaves.push_back(v);
      continue;
    }
    stack.push_back(sh.right[v]);
    stack.push_back(sh.left[v]);
  }
  if (leaves.size() == 1) {
    sched.final_node = leaves.front();
    return sched;
  }

  std::vector<std::size_t> number(count, 0);
  std::vector<std::size_t> numbered(leaves.begin() + 1, leaves.end() - 1);
  for (std::size_t k = 0; k < numbered.size(); ++k) number[numbered[k]] = k + 1;

  auto rake = [&](std::size_t l) {
    Step st;
    st.leaf = l;
    st.parent = sh.parent[l];
    st.leaf_is_left = sh.left[st.parent] == l;
    st.sibling = st.leaf_is_left ? sh.right[st.parent] : sh.left[st.parent];
    return st;
  };
  auto commit = [&](Round& round) {
    if (round.empty()) return;
    check_disjoint(round, count);
    for (const Step& st : round) sh.replace(st.parent, st.sibling);
    sched.rounds.push_back(std::move(round));
  };

  while (!numbered.empty()) {
    for (const bool left_side : {true, false}) {
      Round round;
      for (std::size_t l : numbered) {
        if (number[l] % 2 == 1 && (sh.left[sh.parent[l]] == l) == left_side) {
          round.push_back(rake(l));
        }
      }
      commit(round);
    }
    std::vector<std::size_t> rest;
    for (std::size_t l : numbered) {
      if (number[l] % 2 == 0) {
        number[l] /= 2;
        rest.push_back(l);
      }
    }
    numbered = std::move(rest);
  }

  const std::size_t r = sh.root;
  if (sh.left[r] != leaves.front() || sh.right[r] != leaves.back()) {
    throw std::logic_error("contraction did not reduce to a root with two leaves");
  }
  Round last{rake(leaves.front())};
  commit(last);
  sched.final_node = leaves.back();
  return sched;
}

namespace {

class MtlPolicy {
 public:
  using Function = TransducerCircuit;

  MtlPolicy(const Trace& trace, const ContractionOptions& options)
      : trace_(trace), options_(options) {}

  Function partial(const TreeNode& p, bool constant_on_left, const BoolVec& c) const {
    const Interval& iv = p.interval;
    auto pick = [&](DualOp left, DualOp right) {
      return build_dual(constant_on_left ? left : right, c, iv, trace_);
    };
    switch (p.op) {
      case NodeOp::And: return built(build_pointwise(PointwiseOp::AndConst, c, iv, trace_));
      case NodeOp::Or: return built(build_pointwise(PointwiseOp::OrConst, c, iv, trace_));
      case NodeOp::Xor: return built(build_pointwise(PointwiseOp::XorConst, c, iv, trace_));
      case NodeOp::Until:
        return built(constant_on_left ? build_until_left(c, iv, trace_)
                                      : build_until_right(c, iv, trace_));
      case NodeOp::Release: return built(pick(DualOp::ReleaseLeft, DualOp::ReleaseRight));
      case NodeOp::Since: return built(pick(DualOp::SinceLeft, DualOp::SinceRight));
      case NodeOp::Trigger: return built(pick(DualOp::TriggerLeft, DualOp::TriggerRight));
      default: break;
    }
    throw std::logic_error(std::string("no constant builder for ") + to_string(p.op));
  }

  Function unary(const TreeNode& u) const {
    const Interval& iv = u.interval;
    switch (u.op) {
      case NodeOp::Next: return built(build_pointwise(PointwiseOp::Next, {}, iv, trace_));
      case NodeOp::Yesterday:
        return built(build_pointwise(PointwiseOp::Yesterday, {}, iv, trace_));
      case NodeOp::WeakNext: return built(build_pointwise(PointwiseOp::WeakNext, {}, iv, trace_));
      case NodeOp::WeakYesterday:
        return built(build_pointwise(PointwiseOp::WeakYesterday, {}, iv, trace_));
      case NodeOp::Eventually: return built(build_unary(UnaryTemporal::Eventually, iv, trace_));
      case NodeOp::Always: return built(build_unary(UnaryTemporal::Always, iv, trace_));
      case NodeOp::Once: return built(build_unary(UnaryTemporal::Once, iv, trace_));
      case NodeOp::Historically:
        return built(build_unary(UnaryTemporal::Historically, iv, trace_));
      default: break;
    }
    throw std::logic_error(std::string("no unary builder for ") + to_string(u.op));
  }

  Function compose(const Function& outer, const Function& inner) const {
    Function c = compose_transducers(outer, inner);
    if (options_.observer) options_.observer(c);
    return c;
  }

  BoolVec apply(const Function& f, const BoolVec& x) const { return apply_transducer(f, x); }

 private:
  Function built(Function f) const {
    if (options_.mutate) options_.mutate(f);
    if (options_.observer) options_.observer(f);
    return f;
  }

  const Trace& trace_;
  const ContractionOptions& options_;
};

}  // namespace

BoolVec run_mtl(const Trace& trace, const Formula& f, const ContractionOptions& options,
                ContractionStats* stats) {
  const ContractionTree tree = build_tree(trace, f, true);
  const Schedule schedule = schedule_rounds(tree);
  if (stats) {
    stats->leaves = tree.leaf_count();
    stats->rounds = schedule.rounds.size();
  }
  return contract(tree, schedule, MtlPolicy(trace, options), options.workers);
}

}  // namespace mtlpc
