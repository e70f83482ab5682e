#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mtlpc/boolvec.hpp"

namespace mtlpc {

/// `Input` gates read the circuit's input assignment; the other constant
/// sources are `Zero` and `One`. `Xor` exists only for the LTL-with-xor direction.
enum class GateType { Input, Zero, One, Id, Not, And, Or, Xor };

std::string to_string(GateType t);
GateType gate_type_from_string(const std::string& s);

struct GateRef {
  std::size_t layer = 0;
  std::size_t index = 0;
  friend bool operator==(const GateRef&, const GateRef&) = default;
};

struct Gate {
  GateType type = GateType::Input;
  /// Ordered predecessor list. Constant gates ignore their predecessors (a
  /// normalized constant above layer 0 carries one wire for planarity only).
  std::vector<GateRef> preds;
};

using Layer = std::vector<Gate>;

/// Layers C_0..C_k, each ordered left to right. `output` indexes the top layer.
struct LayeredCircuit {
  std::vector<Layer> layers;
  std::size_t output = 0;

  std::size_t gate_count() const;
  std::size_t wire_count() const;
  const Gate& gate(GateRef r) const { return layers.at(r.layer).at(r.index); }
  /// Input gates in (layer, index) order.
  std::vector<GateRef> input_gates() const;
};

struct ValidationReport {
  bool layered = true;       ///< every wire joins C_i to C_{i+1}
  bool stratified = true;    ///< gates without predecessors all sit in C_0
  bool contiguous = true;    ///< predecessors are an ascending contiguous block
  bool non_crossing = true;  ///< wires between adjacent layers do not cross
  bool monotone = true;      ///< no NOT or XOR gates
  bool arity_ok = true;      ///< fan-in fits the gate type
  std::optional<bool> transducer;  ///< set when validated as a transducer
  std::vector<std::string> violations;

  bool upward_layered() const { return layered && contiguous && non_crossing && arity_ok; }
  bool upward_stratified() const { return upward_layered() && stratified; }
  bool ok() const { return upward_layered() && transducer.value_or(true); }
};

ValidationReport validate(const LayeredCircuit& c);

/// Gate values, indexed [layer][index].
using CircuitValues = std::vector<std::vector<char>>;

/// Layer-by-layer evaluation. `inputs` assigns the Input gates in
/// `input_gates()` order; throws std::invalid_argument on a count mismatch or
/// when a wire does not point to a lower layer.
CircuitValues evaluate(const LayeredCircuit& c, const BoolVec& inputs);
bool output_value(const LayeredCircuit& c, const BoolVec& inputs);

/// Gives every predecessor-less ZERO/ONE gate of `layer` (> 0) one wire from
/// the layer below, chosen between the rightmost predecessor of its left
/// neighbour and the leftmost predecessor of its right neighbour so the
/// non-crossing order is kept. Gate values do not change.
void attach_constants(LayeredCircuit& c, std::size_t layer);

/// Integer plane points, one per gate, [layer][index].
struct Point {
  long long x = 0;
  long long y = 0;
};
using Embedding = std::vector<std::vector<Point>>;

/// gamma(alpha_{i,j}) = (j, i).
Embedding layer_embedding(const LayeredCircuit& c);
/// Empty when every wire strictly rises and no two wires cross except at a
/// shared endpoint; otherwise one message per problem.
std::vector<std::string> check_embedding(const LayeredCircuit& c, const Embedding& e);

/// An upward-stratified circuit whose bottom layer is exactly `width` Input
/// gates and whose top layer is exactly `width` output gates, both ordered
/// 1..width left to right.
struct TransducerCircuit {
  LayeredCircuit circuit;
  std::size_t width = 0;
  /// ID gates added only to keep wires between adjacent layers.
  std::size_t padding = 0;

  std::size_t gate_count() const { return circuit.gate_count(); }
};

ValidationReport validate_transducer(const TransducerCircuit& t);

TransducerCircuit identity_transducer(std::size_t width);
BoolVec apply_transducer(const TransducerCircuit& t, const BoolVec& x);
/// apply(result, x) == apply(outer, apply(inner, x)). Throws on width mismatch.
TransducerCircuit compose_transducers(const TransducerCircuit& outer,
                                      const TransducerCircuit& inner);

/// Swaps AND/OR and ZERO/ONE: for a circuit C without XOR,
/// dual(C)(x) = !C(!x).
TransducerCircuit dualize(const TransducerCircuit& t);
/// Reverses the left-to-right order of every layer (time reversal of ports).
TransducerCircuit mirror(const TransducerCircuit& t);

}  // namespace mtlpc
