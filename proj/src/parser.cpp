#include "mtlpc/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <stdexcept>

#include "mtlpc/error.hpp"

namespace mtlpc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_hole) : text_(text), allow_hole_(allow_hole) {}

  Formula parse() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  // Identifier at the cursor without consuming it.
  std::string_view peek_word() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      ++end;
    }
    if (end == pos_ || std::isdigit(static_cast<unsigned char>(text_[pos_]))) return {};
    return text_.substr(pos_, end - pos_);
  }

  std::uint64_t parse_nat() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        fail("interval bound too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return value;
  }

  bool at_interval() {
    char c = peek();
    if (c == '[') return true;
    if (c != '(') return false;
    std::size_t look = pos_ + 1;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    return look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]));
  }

  Interval parse_interval() {
    const std::size_t start = pos_;
    const bool lo_closed = text_[pos_] == '[';
    ++pos_;
    const std::uint64_t lo = parse_nat();
    if (!consume(',')) fail("expected ',' in interval");
    std::optional<std::uint64_t> hi;
    if (peek_word() == "inf") {
      pos_ += 3;
    } else {
      hi = parse_nat();
    }
    bool hi_closed;
    if (consume(']')) {
      hi_closed = true;
    } else if (consume(')')) {
      hi_closed = false;
    } else {
      fail("expected ']' or ')' closing interval");
    }
    try {
      return Interval::make(lo, hi, lo_closed, hi_closed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("malformed interval: ") + e.what(), start);
    }
  }

  Interval optional_interval() { return at_interval() ? parse_interval() : Interval{}; }

  Formula parse_or() {
    Formula f = parse_xor();
    while (consume('|')) f = Formula::disj(f, parse_xor());
    return f;
  }

  Formula parse_xor() {
    Formula f = parse_and();
    while (consume('^')) f = Formula::exclusive(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_temporal();
    while (consume('&')) f = Formula::conj(f, parse_temporal());
    return f;
  }

  Formula parse_temporal() {
    Formula lhs = parse_unary();
    std::string_view w = peek_word();
    Op op;
    if (w == "U") {
      op = Op::Until;
    } else if (w == "S") {
      op = Op::Since;
    } else if (w == "R") {
      op = Op::Release;
    } else if (w == "T") {
      op = Op::Trigger;
    } else {
      return lhs;
    }
    pos_ += 1;
    Interval interval = optional_interval();
    Formula rhs = parse_temporal();
    return Formula::binary(op, lhs, rhs, interval);
  }

  Formula parse_unary() {
    if (consume('!')) return Formula::negation(parse_unary());
    std::string_view w = peek_word();
    std::optional<Op> op;
    if (w == "X") op = Op::Next;
    if (w == "Y") op = Op::Yesterday;
    if (w == "F") op = Op::Eventually;
    if (w == "G") op = Op::Always;
    if (w == "O") op = Op::Once;
    if (w == "H") op = Op::Historically;
    if (op) {
      pos_ += 1;
      Interval interval = optional_interval();
      return Formula::unary(*op, parse_unary(), interval);
    }
    return parse_primary();
  }

  Formula parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      if (!consume(')')) fail("expected ')'");
      return f;
    }
    if (c == '?') {
      if (!allow_hole_) fail("'?' is only allowed in formula contexts");
      ++pos_;
      return Formula::hole();
    }
    std::string_view w = peek_word();
    if (w.empty()) fail(c == '\0' ? "unexpected end of input" : "expected a formula");
    if (w == "true" || w == "false") {
      pos_ += w.size();
      return w == "true" ? Formula::top() : Formula::bottom();
    }
    if (w.size() == 1 && std::string_view("XYFGOHUSRT").find(w[0]) != std::string_view::npos) {
      fail("operator '" + std::string(w) + "' used where a formula was expected");
    }
    if (w == "inf") fail("'inf' is reserved");
    pos_ += w.size();
    return Formula::atom(std::string(w));
  }

  std::string_view text_;
  bool allow_hole_;
  std::size_t pos_ = 0;
};

const char* op_symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Xor: return "^";
    case Op::Next: return "X";
    case Op::Yesterday: return "Y";
    case Op::Eventually: return "F";
    case Op::Always: return "G";
    case Op::Once: return "O";
    case Op::Historically: return "H";
    case Op::Until: return "U";
    case Op::Since: return "S";
    case Op::Release: return "R";
    case Op::Trigger: return "T";
    default: return "";
  }
}

void print_into(const Formula& f, std::string& out);

void print_operand(const Formula& f, std::string& out) {
  if (is_binary(f.op())) {
    out += '(';
    print_into(f, out);
    out += ')';
  } else {
    print_into(f, out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Atom: out += f.name(); return;
    case Op::Hole: out += "?"; return;
    case Op::Not:
      out += "!";
      print_operand(f.lhs(), out);
      return;
    default: break;
  }
  if (is_unary(f.op())) {
    out += op_symbol(f.op());
    out += f.interval().to_string();
    out += ' ';
    print_operand(f.lhs(), out);
    return;
  }
  print_operand(f.lhs(), out);
  out += ' ';
  out += op_symbol(f.op());
  out += f.interval().to_string();
  out += ' ';
  print_operand(f.rhs(), out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, false).parse(); }

FormulaContext parse_context(std::string_view text) {
  Formula body = Parser(text, true).parse();
  if (body.hole_count() != 1) {
    throw ParseError("a formula context needs exactly one '?', found " +
                     std::to_string(body.hole_count()));
  }
  return FormulaContext(body);
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

}  // namespace mtlpc
