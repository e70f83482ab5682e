#include "mtlpc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mtlpc/error.hpp"

namespace mtlpc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

BoolVec bits_from_json(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw ParseError(what + " must be an array of 0/1");
  BoolVec v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& b = arr[i];
    if (b.is_boolean()) {
      v.set(i + 1, b.get<bool>());
    } else if (b.is_number_integer() && (b.get<long long>() == 0 || b.get<long long>() == 1)) {
      v.set(i + 1, b.get<long long>() == 1);
    } else {
      throw ParseError(what + " must be an array of 0/1");
    }
  }
  return v;
}

json bits_to_json(const BoolVec& v) {
  json arr = json::array();
  for (char b : v.raw()) arr.push_back(b ? 1 : 0);
  return arr;
}

}  // namespace

Trace parse_trace_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("timestamps") || !doc.contains("propositions")) {
    throw ParseError("trace needs \"timestamps\" and \"propositions\"");
  }
  const json& ts = doc["timestamps"];
  if (!ts.is_array()) throw ParseError("\"timestamps\" must be an array");
  std::vector<std::string> stamps;
  for (const json& t : ts) {
    if (t.is_string()) {
      stamps.push_back(t.get<std::string>());
    } else if (t.is_number()) {
      // Shortest round-trip form, e.g. 8.5; exponent forms are rejected below.
      stamps.push_back(t.dump());
    } else {
      throw ParseError("timestamps must be decimal strings or numbers");
    }
  }
  const json& ps = doc["propositions"];
  if (!ps.is_object()) throw ParseError("\"propositions\" must be an object");
  Trace::PropositionMap props;
  for (const auto& [name, values] : ps.items()) {
    props.emplace(name, bits_from_json(values, "proposition '" + name + "'"));
  }
  try {
    return Trace(stamps, std::move(props));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string trace_to_json(const Trace& trace) {
  json doc;
  doc["timestamps"] = trace.timestamp_strings();
  json props = json::object();
  for (const auto& [name, values] : trace.propositions()) props[name] = bits_to_json(values);
  doc["propositions"] = props;
  return doc.dump(2) + "\n";
}

CircuitFile parse_circuit_json(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("layers")) throw ParseError("circuit needs \"layers\"");
  CircuitFile out;
  const json& layers = doc["layers"];
  if (!layers.is_array() || layers.empty()) throw ParseError("\"layers\" must be a non-empty array");
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (!layers[l].is_array()) throw ParseError("each layer must be an array of gates");
    Layer layer;
    for (const json& g : layers[l]) {
      if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
        throw ParseError("each gate needs a string \"type\"");
      }
      Gate gate;
      try {
        gate.type = gate_type_from_string(g["type"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      if (g.contains("preds")) {
        if (!g["preds"].is_array()) throw ParseError("\"preds\" must be an array");
        for (const json& p : g["preds"]) {
          if (!p.is_number_unsigned() && !(p.is_number_integer() && p.get<long long>() >= 0)) {
            throw ParseError("predecessor indices must be non-negative integers");
          }
          if (l == 0) throw ParseError("gates in layer 0 cannot have predecessors");
          const std::size_t index = p.get<std::size_t>();
          if (index >= layers[l - 1].size()) {
            throw ParseError("predecessor " + std::to_string(index) + " of a gate in layer " +
                             std::to_string(l) + " is out of range");
          }
          gate.preds.push_back(GateRef{l - 1, index});
        }
      }
      layer.push_back(std::move(gate));
    }
    out.circuit.layers.push_back(std::move(layer));
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_number_integer() || doc["output"].get<long long>() < 0) {
      throw ParseError("\"output\" must be a non-negative integer");
    }
    out.circuit.output = doc["output"].get<std::size_t>();
  }
  if (out.circuit.output >= out.circuit.layers.back().size()) {
    throw ParseError("\"output\" does not index a top-layer gate");
  }
  if (doc.contains("inputs")) out.inputs = bits_from_json(doc["inputs"], "\"inputs\"");
  return out;
}

std::string circuit_to_json(const LayeredCircuit& c, const std::optional<BoolVec>& inputs) {
  json layers = json::array();
  for (const Layer& layer : c.layers) {
    json gates = json::array();
    for (const Gate& g : layer) {
      json gate;
      gate["type"] = to_string(g.type);
      if (!g.preds.empty()) {
        json preds = json::array();
        for (const GateRef& p : g.preds) preds.push_back(p.index);
        gate["preds"] = preds;
      }
      gates.push_back(gate);
    }
    layers.push_back(gates);
  }
  json doc;
  doc["layers"] = layers;
  doc["output"] = c.output;
  if (inputs) doc["inputs"] = bits_to_json(*inputs);
  return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace mtlpc
