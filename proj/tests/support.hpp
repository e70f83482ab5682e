// Random instances shared by the unit and acceptance tests.
#pragma once

#include <string>
#include <vector>

#include "mtlpc/dp_eval.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/utl.hpp"

namespace support {

inline mtlpc::BoolVec from_mask(unsigned long long bits, std::size_t n) {
  mtlpc::BoolVec v(n);
  for (std::size_t i = 1; i <= n; ++i) v.set(i, (bits >> (i - 1)) & 1);
  return v;
}

/// Offset in [-span, span]; cells that would read outside [1, n] become constants.
inline mtlpc::Filter random_filter(mtlpc::Rng& rng, std::size_t n, long span = 3) {
  using mtlpc::Cell;
  const long offset = static_cast<long>(mtlpc::uniform(rng, 0, 2 * span)) - span;
  std::vector<Cell> cells(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const long src = static_cast<long>(i) + offset;
    const bool inside = src >= 1 && src <= static_cast<long>(n);
    const auto pick = mtlpc::uniform(rng, 0, inside ? 3 : 1);
    cells[i - 1] = pick == 0 ? Cell::Zero : pick == 1 ? Cell::One : pick == 2 ? Cell::Id : Cell::Not;
  }
  return mtlpc::Filter(std::move(cells), offset);
}

inline mtlpc::TemporalOp random_temporal(mtlpc::Rng& rng) {
  mtlpc::TemporalOp op;
  op.kind = static_cast<mtlpc::TemporalKind>(mtlpc::uniform(rng, 0, 3));
  if (mtlpc::chance(rng, 50)) {
    op.interval = mtlpc::Interval::at_least(mtlpc::uniform(rng, 0, 4), mtlpc::chance(rng, 50));
  }
  return op;
}

inline std::string temporal_text(const mtlpc::TemporalOp& op) {
  static const char* letters[] = {"F", "G", "O", "H"};
  return letters[static_cast<int>(op.kind)] + op.interval.to_string() + " x";
}

/// T(x) on `trace` by the dynamic-programming evaluator.
inline mtlpc::BoolVec apply_temporal(const mtlpc::TemporalOp& op, const mtlpc::Trace& trace,
                                     const mtlpc::BoolVec& x) {
  return mtlpc::eval(trace.with_proposition("x", x), mtlpc::parse_formula(temporal_text(op)));
}

}  // namespace support
