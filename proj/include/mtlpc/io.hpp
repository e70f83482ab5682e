#pragma once

#include <optional>
#include <string>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/circuit.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

/// {"timestamps": [...], "propositions": {"p": [0,1,...]}}. Timestamps may be
/// decimal strings or plain JSON numbers. Throws ParseError.
Trace parse_trace_json(const std::string& text);
/// Timestamps are written as decimal strings, so they round-trip exactly.
std::string trace_to_json(const Trace& trace);

/// {"layers": [[{"type": "or", "preds": [0, 1]}, ...], ...], "output": 0,
///  "inputs": [0, 1, ...]}. "inputs" is optional. Throws ParseError.
struct CircuitFile {
  LayeredCircuit circuit;
  std::optional<BoolVec> inputs;
};
CircuitFile parse_circuit_json(const std::string& text);
std::string circuit_to_json(const LayeredCircuit& c, const std::optional<BoolVec>& inputs = {});

/// Whole-file helpers; throw Error when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mtlpc
