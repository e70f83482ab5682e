#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mtlpc/circuit.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

struct CrosscheckOptions {
  std::size_t formulas = 1000;
  std::size_t circuits = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::size_t max_length = 32;
  std::size_t max_size = 16;
  /// Reproducers are written here; empty disables writing.
  std::string reproducer_dir;
  /// Passed to the contraction engine as its mutate hook (fault injection).
  std::function<void(TransducerCircuit&)> fault;
};

struct Mismatch {
  std::string kind;         ///< "formula" or "circuit"
  std::string description;  ///< engines and values that disagree
  std::vector<std::string> files;
};

struct CrosscheckReport {
  std::size_t formula_cases = 0;
  std::size_t circuit_cases = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  /// Deterministic for fixed options (no timings).
  std::string summary() const;
};

/// Random (trace, formula) pairs across all fragments checked by dp_eval,
/// contraction and (for unary fragments) the UTL engine, then random circuits
/// checked by evaluation against dp_eval and contraction on their reductions.
/// Formula mismatches are minimized before being reported.
CrosscheckReport crosscheck(const CrosscheckOptions& options);

/// Empty when all engines agree on (trace, f); otherwise a description.
std::string compare_engines(const Trace& trace, const Formula& f, unsigned workers = 1,
                            const std::function<void(TransducerCircuit&)>& fault = {});

struct FormulaCase {
  Trace trace;
  Formula formula;
};

/// Shrinks a failing case: halves the trace while `fails` still holds, and
/// replaces subformulae by one of their children while it still holds.
FormulaCase minimize_case(FormulaCase failing,
                          const std::function<bool(const Trace&, const Formula&)>& fails);

}  // namespace mtlpc
