#include "mtlpc/formula.hpp"

#include <cctype>
#include <stdexcept>

namespace mtlpc {

bool is_unary(Op op) {
  switch (op) {
    case Op::Not:
    case Op::Next:
    case Op::Yesterday:
    case Op::Eventually:
    case Op::Always:
    case Op::Once:
    case Op::Historically:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Xor:
    case Op::Until:
    case Op::Since:
    case Op::Release:
    case Op::Trigger:
      return true;
    default:
      return false;
  }
}

bool is_temporal(Op op) {
  return is_unary(op) ? op != Op::Not
                      : (op == Op::Until || op == Op::Since || op == Op::Release ||
                         op == Op::Trigger);
}

namespace {

bool is_reserved(const std::string& name) {
  static const std::set<std::string> reserved = {"X", "Y", "F", "G", "O", "H", "U",
                                                 "S", "R", "T", "true", "false", "inf"};
  return reserved.count(name) != 0;
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::shared_ptr<const FormulaNode> make_node(Op op, std::string name, Interval interval,
                                             std::vector<Formula> children) {
  std::size_t size = 1;
  std::size_t holes = op == Op::Hole ? 1 : 0;
  for (const auto& c : children) {
    size += c.size();
    holes += c.hole_count();
  }
  return std::make_shared<const FormulaNode>(
      FormulaNode{op, std::move(name), interval, std::move(children), size, holes});
}

}  // namespace

Formula Formula::top() { return Formula(make_node(Op::True, "", {}, {})); }
Formula Formula::bottom() { return Formula(make_node(Op::False, "", {}, {})); }

Formula Formula::atom(const std::string& name) {
  if (!is_identifier(name) || is_reserved(name)) {
    throw std::invalid_argument("invalid proposition name '" + name + "'");
  }
  return Formula(make_node(Op::Atom, name, {}, {}));
}

Formula Formula::hole() { return Formula(make_node(Op::Hole, "", {}, {})); }

Formula Formula::negation(Formula f) { return unary(Op::Not, std::move(f)); }
Formula Formula::conj(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
Formula Formula::exclusive(Formula a, Formula b) {
  return binary(Op::Xor, std::move(a), std::move(b));
}

Formula Formula::unary(Op op, Formula f, Interval interval) {
  if (!is_unary(op)) throw std::invalid_argument("not a unary operator");
  if (op == Op::Not && !interval.is_trivial()) {
    throw std::invalid_argument("negation takes no interval");
  }
  return Formula(make_node(op, "", interval, {std::move(f)}));
}

Formula Formula::binary(Op op, Formula a, Formula b, Interval interval) {
  if (!is_binary(op)) throw std::invalid_argument("not a binary operator");
  if (!is_temporal(op) && !interval.is_trivial()) {
    throw std::invalid_argument("Boolean connectives take no interval");
  }
  return Formula(make_node(op, "", interval, {std::move(a), std::move(b)}));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Interval& Formula::interval() const { return node_->interval; }
std::size_t Formula::arity() const { return node_->children.size(); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hole_count() const { return node_->holes; }

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->op() == Op::Atom) out.insert(f->name());
    for (const auto& c : f->node_->children) stack.push_back(&c);
  }
  return out;
}

Formula Formula::substitute(const Formula& replacement) const {
  if (hole_count() == 0) return *this;
  if (op() == Op::Hole) return replacement;
  std::vector<Formula> children;
  children.reserve(arity());
  for (const auto& c : node_->children) children.push_back(c.substitute(replacement));
  return Formula(make_node(op(), name(), interval(), std::move(children)));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.name != y.name || !(x.interval == y.interval) || x.size != y.size) {
    return false;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

FormulaContext::FormulaContext() : body_(Formula::hole()) {}

FormulaContext::FormulaContext(Formula body) : body_(std::move(body)) {
  if (body_.hole_count() != 1) {
    throw std::invalid_argument("a formula context needs exactly one hole, found " +
                                std::to_string(body_.hole_count()));
  }
}

FormulaContext compose_contexts(const FormulaContext& outer, const FormulaContext& inner) {
  return FormulaContext(outer.apply(inner.body()));
}

std::string to_string(Fragment f) {
  switch (f) {
    case Fragment::UTL: return "UTL";
    case Fragment::UTL_GEQ: return "UTL_GEQ";
    case Fragment::LTL: return "LTL";
    case Fragment::LTL_XOR: return "LTL_XOR";
    case Fragment::MTL: return "MTL";
    case Fragment::MTL_XOR: return "MTL_XOR";
  }
  return "?";
}

bool is_unary_fragment(Fragment f) { return f == Fragment::UTL || f == Fragment::UTL_GEQ; }

Fragment classify_fragment(const Formula& f) {
  bool binary_temporal = false;
  bool has_xor = false;
  bool lower_bounded = false;  // F/G/O/H over [a,inf) with a nontrivial lower end
  bool timed = false;          // any other non-trivial interval

  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    const Op op = g->op();
    if (op == Op::Xor) has_xor = true;
    if (is_binary(op) && is_temporal(op)) binary_temporal = true;
    if (is_temporal(op) && !g->interval().is_trivial()) {
      const bool unbounded_unary = g->interval().is_unbounded() &&
                                   (op == Op::Eventually || op == Op::Always || op == Op::Once ||
                                    op == Op::Historically);
      (unbounded_unary ? lower_bounded : timed) = true;
    }
    for (std::size_t i = 0; i < g->arity(); ++i) stack.push_back(&g->child(i));
  }

  if (!binary_temporal && !timed) return lower_bounded ? Fragment::UTL_GEQ : Fragment::UTL;
  if (!timed && !lower_bounded) return has_xor ? Fragment::LTL_XOR : Fragment::LTL;
  return has_xor ? Fragment::MTL_XOR : Fragment::MTL;
}

}  // namespace mtlpc
