#pragma once

#include <string>
#include <string_view>

#include "mtlpc/formula.hpp"

namespace mtlpc {

// Grammar, loosest binding first:
//
//   formula  := xor ('|' xor)*
//   xor      := and ('^' and)*
//   and      := temporal ('&' temporal)*
//   temporal := unary (('U'|'S'|'R'|'T') interval? temporal)?     right-assoc
//   unary    := '!' unary | ('X'|'Y'|'F'|'G'|'O'|'H') interval? unary | primary
//   primary  := ident | 'true' | 'false' | '?' | '(' formula ')'
//   interval := ('['|'(') nat ',' (nat | 'inf') (']'|')')
//
// '?' is the hole of a formula context and is only accepted by parse_context.

/// Throws ParseError (with a character position) on bad syntax or a malformed
/// interval.
Formula parse_formula(std::string_view text);
FormulaContext parse_context(std::string_view text);

/// Text that parse_formula maps back to an identical AST.
std::string print_formula(const Formula& f);

}  // namespace mtlpc
