#pragma once

#include <unordered_map>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

/// Truth vector of every subformula occurrence, in post-order (children
/// before parents; the last entry is the whole formula).
struct SatTable {
  std::vector<Formula> subformulae;
  std::vector<BoolVec> values;
};

/// Reference evaluator: tabulates pi,i |= psi bottom-up over subformulae using
/// the satisfaction clauses directly. Throws UnknownPropositionError.
BoolVec eval(const Trace& trace, const Formula& f);
SatTable tabulate(const Trace& trace, const Formula& f);

/// pi,1 |= f.
bool check(const Trace& trace, const Formula& f);

}  // namespace mtlpc
