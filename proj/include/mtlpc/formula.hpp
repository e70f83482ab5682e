#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mtlpc/interval.hpp"

namespace mtlpc {

enum class Op {
  True,
  False,
  Atom,
  Hole,
  Not,
  And,
  Or,
  Xor,
  Next,
  Yesterday,
  Eventually,
  Always,
  Once,
  Historically,
  Until,
  Since,
  Release,
  Trigger,
};

bool is_unary(Op op);
bool is_binary(Op op);
/// X, Y, F, G, O, H, U, S, R, T.
bool is_temporal(Op op);

struct FormulaNode;

/// Immutable MTL formula. Copies share structure.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  /// Throws std::invalid_argument when `name` is not a valid identifier or is
  /// a reserved operator letter.
  static Formula atom(const std::string& name);
  static Formula hole();
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula exclusive(Formula a, Formula b);
  static Formula unary(Op op, Formula f, Interval interval = {});
  static Formula binary(Op op, Formula a, Formula b, Interval interval = {});

  static Formula next(Formula f, Interval i = {}) { return unary(Op::Next, std::move(f), i); }
  static Formula yesterday(Formula f, Interval i = {}) {
    return unary(Op::Yesterday, std::move(f), i);
  }
  static Formula eventually(Formula f, Interval i = {}) {
    return unary(Op::Eventually, std::move(f), i);
  }
  static Formula always(Formula f, Interval i = {}) { return unary(Op::Always, std::move(f), i); }
  static Formula once(Formula f, Interval i = {}) { return unary(Op::Once, std::move(f), i); }
  static Formula historically(Formula f, Interval i = {}) {
    return unary(Op::Historically, std::move(f), i);
  }
  static Formula until(Formula a, Formula b, Interval i = {}) {
    return binary(Op::Until, std::move(a), std::move(b), i);
  }
  static Formula since(Formula a, Formula b, Interval i = {}) {
    return binary(Op::Since, std::move(a), std::move(b), i);
  }
  static Formula release(Formula a, Formula b, Interval i = {}) {
    return binary(Op::Release, std::move(a), std::move(b), i);
  }
  static Formula trigger(Formula a, Formula b, Interval i = {}) {
    return binary(Op::Trigger, std::move(a), std::move(b), i);
  }

  Op op() const;
  const std::string& name() const;
  const Interval& interval() const;
  std::size_t arity() const;
  /// Operand of a unary node, or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& child(std::size_t i) const;

  /// Node count.
  std::size_t size() const;
  std::size_t hole_count() const;
  std::set<std::string> atoms() const;

  /// Identity of the shared node, for memoization.
  const FormulaNode* id() const { return node_.get(); }

  /// Replaces every hole by `replacement`.
  Formula substitute(const Formula& replacement) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op;
  std::string name;
  Interval interval;
  std::vector<Formula> children;
  std::size_t size;
  std::size_t holes;
};

/// A formula with exactly one hole.
class FormulaContext {
 public:
  /// The identity context (a bare hole).
  FormulaContext();
  /// Throws std::invalid_argument unless `body` has exactly one hole.
  explicit FormulaContext(Formula body);

  const Formula& body() const { return body_; }
  std::size_t size() const { return body_.size(); }

  Formula apply(const Formula& f) const { return body_.substitute(f); }

  friend bool operator==(const FormulaContext&, const FormulaContext&) = default;

 private:
  Formula body_;
};

/// (outer o inner)(X) = outer(inner(X)).
FormulaContext compose_contexts(const FormulaContext& outer, const FormulaContext& inner);

enum class Fragment { UTL, UTL_GEQ, LTL, LTL_XOR, MTL, MTL_XOR };

std::string to_string(Fragment f);
/// Least fragment containing `f`. Negation and XOR are allowed in the unary
/// fragments; they only matter for the binary-operator fragments.
Fragment classify_fragment(const Formula& f);
bool is_unary_fragment(Fragment f);

}  // namespace mtlpc
