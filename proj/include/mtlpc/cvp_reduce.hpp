#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/circuit.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

/// Gives every ZERO/ONE gate above the input layer one planarity-preserving
/// wire (see attach_constants). Values are unchanged.
LayeredCircuit normalize(const LayeredCircuit& c);

/// Removes gates that do not reach the output, including the other top-layer
/// gates. `kept[l]` lists the original indices that survive in layer l.
struct Pruned {
  LayeredCircuit circuit;
  std::vector<std::vector<std::size_t>> kept;
};
Pruned prune_to_output(const LayeredCircuit& c);

struct Wire {
  GateRef from;
  GateRef to;
  friend bool operator==(const Wire&, const Wire&) = default;
};

/// pi for gate g: the rightmost-predecessor chain down to the input layer
/// followed by the rightmost-successor chain up to the top, one wire per layer
/// gap, listed bottom to top.
std::vector<Wire> rightmost_path(const LayeredCircuit& c, GateRef g);

/// Number of wires left of pi, summed over all layer gaps. Wire x->y is left of
/// a->b when x < a or y < b (indices within the two layers).
std::size_t compute_k(const LayeredCircuit& c, GateRef g);

struct Block {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockPartition {
  std::vector<std::vector<std::size_t>> k;     ///< [layer][gate]
  std::vector<std::vector<Block>> blocks;      ///< [layer][gate], positions 1..length
  std::size_t length = 0;                      ///< trace length N
};

/// v(i,1) = [1, k_{i,1}+1] and v(i,j) = [k_{i,j-1}+2, k_{i,j}+1].
BlockPartition compute_blocks(const LayeredCircuit& c);

/// Messages for every violated partition invariant (strictly increasing k per
/// layer, equal final k across layers and at most the wire count, blocks
/// partitioning [1, N], each gate's block covered by and overlapping every
/// predecessor block).
std::vector<std::string> check_blocks(const LayeredCircuit& c, const BlockPartition& b);

inline constexpr const char* kInputProposition = "r0";
/// "chi_l_r", true exactly on positions l..r.
std::string chi_name(std::size_t lo, std::size_t hi);

/// The one-hole context that rewrites a vector on `block` to the gate's output.
FormulaContext gate_context(GateType type, Block block);

struct Reduction {
  Formula formula;
  Trace trace;
  LayeredCircuit circuit;  ///< normalized and pruned; blocks refer to it
  BlockPartition blocks;
  std::vector<std::vector<std::size_t>> kept;  ///< original gate indices per layer
  BoolVec circuit_inputs;  ///< inputs of `circuit`, in its input-gate order
  /// stages[i] = psi_i(...psi_1(r0)); the last one is `formula`.
  std::vector<Formula> stages;
};

/// Builds (phi, trace) with phi(1) on trace equal to the circuit output under
/// `inputs`. NOT gates need `allow_not` (the result then uses xor). Throws
/// ValidationError for circuits that are not upward layered, that keep
/// source gates above the input layer, or that contain XOR gates.
Reduction reduce(const LayeredCircuit& c, const BoolVec& inputs, bool allow_not = false);
inline Reduction reduce_xor(const LayeredCircuit& c, const BoolVec& inputs) {
  return reduce(c, inputs, true);
}

/// r_0, r_1, ..., r_k: the vector after each layer's contexts, by dp_eval.
std::vector<BoolVec> layer_vectors(const Reduction& red);
/// Messages for positions where r_i differs from the value of the gate whose
/// block contains it.
std::vector<std::string> check_telescoping(const Reduction& red);

}  // namespace mtlpc
