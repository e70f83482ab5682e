#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/circuit.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

/// All generators draw from this engine only through `uniform` and `chance`,
/// so output depends on nothing but the seed and the parameters.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
/// True with probability `percent` / 100.
bool chance(Rng& rng, unsigned percent);

struct TraceParams {
  std::size_t length = 16;
  std::vector<std::string> propositions = {"p", "q", "r"};
  unsigned density = 50;  ///< percent of positions where a proposition holds
  /// Timestamp steps are drawn from {0.5, 1, ..., max_step}; 0 gives t_i = i.
  unsigned max_step = 3;
};

Trace random_trace(Rng& rng, const TraceParams& params);

struct FormulaParams {
  Fragment fragment = Fragment::MTL;
  std::size_t size = 8;  ///< upper bound on the node count
  std::vector<std::string> atoms = {"p", "q", "r"};
  unsigned max_bound = 6;  ///< interval endpoints are drawn from [0, max_bound]
};

/// A formula of at most `size` nodes whose fragment is contained in
/// `params.fragment` (an LTL request may produce a UTL formula, and so on).
Formula random_formula(Rng& rng, const FormulaParams& params);

struct CircuitParams {
  std::size_t layers = 4;     ///< including the input layer; the top layer has one gate
  std::size_t max_width = 5;  ///< gates per layer
  unsigned not_percent = 0;   ///< chance that a single-predecessor gate is NOT
  unsigned const_percent = 5; ///< chance that a gate above the inputs is ZERO/ONE
};

/// Upward-layered circuit with contiguous non-crossing predecessor blocks.
/// Constant gates above the input layer are left without predecessors.
LayeredCircuit random_circuit(Rng& rng, const CircuitParams& params);
BoolVec random_inputs(Rng& rng, std::size_t count);

}  // namespace mtlpc
