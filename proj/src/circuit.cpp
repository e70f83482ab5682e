#include "mtlpc/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mtlpc {

std::string to_string(GateType t) {
  switch (t) {
    case GateType::Input: return "input";
    case GateType::Zero: return "zero";
    case GateType::One: return "one";
    case GateType::Id: return "id";
    case GateType::Not: return "not";
    case GateType::And: return "and";
    case GateType::Or: return "or";
    case GateType::Xor: return "xor";
  }
  return "?";
}

GateType gate_type_from_string(const std::string& s) {
  for (GateType t : {GateType::Input, GateType::Zero, GateType::One, GateType::Id, GateType::Not,
                     GateType::And, GateType::Or, GateType::Xor}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown gate type '" + s + "'");
}

std::size_t LayeredCircuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.size();
  return n;
}

std::size_t LayeredCircuit::wire_count() const {
  std::size_t m = 0;
  for (const auto& layer : layers) {
    for (const auto& g : layer) m += g.preds.size();
  }
  return m;
}

std::vector<GateRef> LayeredCircuit::input_gates() const {
  std::vector<GateRef> out;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (std::size_t j = 0; j < layers[l].size(); ++j) {
      if (layers[l][j].type == GateType::Input) out.push_back({l, j});
    }
  }
  return out;
}

namespace {

std::string gate_name(std::size_t layer, std::size_t index) {
  return "gate (" + std::to_string(layer) + "," + std::to_string(index) + ")";
}

}  // namespace

ValidationReport validate(const LayeredCircuit& c) {
  ValidationReport r;
  auto violation = [&r](bool& flag, std::string msg) {
    flag = false;
    r.violations.push_back(std::move(msg));
  };

  if (c.layers.empty() || c.layers.back().empty()) {
    violation(r.layered, "circuit has no top layer");
    return r;
  }
  if (c.output >= c.layers.back().size()) violation(r.layered, "output index out of range");

  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    if (c.layers[l].empty()) violation(r.layered, "layer " + std::to_string(l) + " is empty");
    // (source index, target index) of wires from layer l-1
    std::vector<std::pair<std::size_t, std::size_t>> wires;
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      const Gate& g = c.layers[l][j];
      const std::string name = gate_name(l, j);
      const std::size_t fan_in = g.preds.size();

      switch (g.type) {
        case GateType::Input:
          if (fan_in != 0) violation(r.arity_ok, name + ": input gate with predecessors");
          break;
        case GateType::Zero:
        case GateType::One:
          if (fan_in > 1) violation(r.arity_ok, name + ": constant gate with fan-in > 1");
          break;
        case GateType::Id:
        case GateType::Not:
          if (fan_in != 1) violation(r.arity_ok, name + ": needs exactly one predecessor");
          break;
        case GateType::And:
        case GateType::Or:
        case GateType::Xor:
          if (fan_in == 0) violation(r.arity_ok, name + ": needs at least one predecessor");
          break;
      }
      if (g.type == GateType::Not || g.type == GateType::Xor) r.monotone = false;
      if (fan_in == 0 && l != 0) {
        violation(r.stratified, name + ": source gate above layer 0");
      }

      bool adjacent = true;
      for (const GateRef& p : g.preds) {
        if (p.layer >= c.layers.size() || p.index >= c.layers[p.layer].size()) {
          violation(r.layered, name + ": dangling predecessor");
          adjacent = false;
        } else if (p.layer + 1 != l) {
          violation(r.layered, name + ": wire from layer " + std::to_string(p.layer) +
                                   " skips to layer " + std::to_string(l));
          adjacent = false;
        }
      }
      if (!adjacent) continue;
      for (std::size_t k = 1; k < fan_in; ++k) {
        if (g.preds[k].index != g.preds[k - 1].index + 1) {
          violation(r.contiguous, name + ": predecessors are not an ascending contiguous block");
          break;
        }
      }
      for (const GateRef& p : g.preds) wires.emplace_back(p.index, j);
    }

    std::sort(wires.begin(), wires.end());
    for (std::size_t k = 1; k < wires.size(); ++k) {
      if (wires[k].second < wires[k - 1].second) {
        violation(r.non_crossing, "wires " + std::to_string(wires[k - 1].first) + "->" +
                                      std::to_string(wires[k - 1].second) + " and " +
                                      std::to_string(wires[k].first) + "->" +
                                      std::to_string(wires[k].second) + " into layer " +
                                      std::to_string(l) + " cross");
        break;
      }
    }
  }
  if (!c.layers.empty()) {
    for (const Gate& g : c.layers.front()) {
      if (!g.preds.empty()) violation(r.layered, "layer 0 gate with predecessors");
    }
  }
  return r;
}

namespace {

bool gate_value(const Gate& g, const std::vector<std::vector<char>>& values,
                const std::vector<char>* prev_layer) {
  auto pred = [&](const GateRef& p) -> bool {
    return prev_layer ? (*prev_layer)[p.index] != 0 : values[p.layer][p.index] != 0;
  };
  switch (g.type) {
    case GateType::Zero: return false;
    case GateType::One: return true;
    case GateType::Id: return pred(g.preds.front());
    case GateType::Not: return !pred(g.preds.front());
    case GateType::And:
      return std::all_of(g.preds.begin(), g.preds.end(), pred);
    case GateType::Or:
      return std::any_of(g.preds.begin(), g.preds.end(), pred);
    case GateType::Xor: {
      bool v = false;
      for (const GateRef& p : g.preds) v = v != pred(p);
      return v;
    }
    case GateType::Input: break;
  }
  throw std::logic_error("input gate evaluated as an internal gate");
}

void require_fan_in(const Gate& g) {
  const bool unary = g.type == GateType::Id || g.type == GateType::Not;
  const bool nary = g.type == GateType::And || g.type == GateType::Or || g.type == GateType::Xor;
  if ((unary && g.preds.size() != 1) || (nary && g.preds.empty())) {
    throw std::invalid_argument("gate " + to_string(g.type) + " has wrong fan-in");
  }
}

}  // namespace

CircuitValues evaluate(const LayeredCircuit& c, const BoolVec& inputs) {
  const std::size_t expected = c.input_gates().size();
  if (inputs.size() != expected) {
    throw std::invalid_argument("circuit has " + std::to_string(expected) + " inputs, got " +
                                std::to_string(inputs.size()));
  }
  CircuitValues values(c.layers.size());
  std::size_t next_input = 1;
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    values[l].assign(c.layers[l].size(), 0);
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      const Gate& g = c.layers[l][j];
      if (g.type == GateType::Input) {
        values[l][j] = inputs(next_input++) ? 1 : 0;
        continue;
      }
      require_fan_in(g);
      for (const GateRef& p : g.preds) {
        if (p.layer >= l || p.index >= c.layers[p.layer].size()) {
          throw std::invalid_argument("wire does not come from a lower layer");
        }
      }
      values[l][j] = gate_value(g, values, nullptr) ? 1 : 0;
    }
  }
  return values;
}

bool output_value(const LayeredCircuit& c, const BoolVec& inputs) {
  const CircuitValues v = evaluate(c, inputs);
  return v.back().at(c.output) != 0;
}

void attach_constants(LayeredCircuit& c, std::size_t layer) {
  if (layer == 0 || layer >= c.layers.size()) return;
  Layer& gates = c.layers[layer];
  if (c.layers[layer - 1].empty()) throw std::logic_error("cannot attach to an empty layer");
  for (std::size_t j = 0; j < gates.size(); ++j) {
    Gate& g = gates[j];
    if (!g.preds.empty() || (g.type != GateType::Zero && g.type != GateType::One)) continue;
    std::size_t target = 0;
    bool found = false;
    for (std::size_t k = j; k-- > 0;) {
      if (!gates[k].preds.empty()) {
        target = gates[k].preds.back().index;
        found = true;
        break;
      }
    }
    for (std::size_t k = j + 1; !found && k < gates.size(); ++k) {
      if (!gates[k].preds.empty()) {
        target = gates[k].preds.front().index;
        found = true;
      }
    }
    g.preds.push_back(GateRef{layer - 1, target});
  }
}

Embedding layer_embedding(const LayeredCircuit& c) {
  Embedding e(c.layers.size());
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      e[l].push_back(Point{static_cast<long long>(j), static_cast<long long>(l)});
    }
  }
  return e;
}

namespace {

struct Segment {
  Point a;
  Point b;
};

__int128 cross(Point o, Point p, Point q) {
  return static_cast<__int128>(p.x - o.x) * (q.y - o.y) -
         static_cast<__int128>(p.y - o.y) * (q.x - o.x);
}

bool same(Point p, Point q) { return p.x == q.x && p.y == q.y; }

bool on_segment(Point p, const Segment& s) {
  return cross(s.a, s.b, p) == 0 && std::min(s.a.x, s.b.x) <= p.x &&
         p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

int sign(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// True when the two segments meet anywhere other than a single shared endpoint.
bool bad_intersection(const Segment& s, const Segment& t) {
  const bool shares = same(s.a, t.a) || same(s.a, t.b) || same(s.b, t.a) || same(s.b, t.b);
  const int d1 = sign(cross(t.a, t.b, s.a));
  const int d2 = sign(cross(t.a, t.b, s.b));
  const int d3 = sign(cross(s.a, s.b, t.a));
  const int d4 = sign(cross(s.a, s.b, t.b));
  if (shares) {
    // Collinear segments sharing an endpoint overlap iff one contains another point.
    if (d1 == 0 && d2 == 0) {
      auto interior = [](Point p, const Segment& seg) {
        return on_segment(p, seg) && !same(p, seg.a) && !same(p, seg.b);
      };
      return interior(s.a, t) || interior(s.b, t) || interior(t.a, s) || interior(t.b, s);
    }
    return false;
  }
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(s.a, t)) || (d2 == 0 && on_segment(s.b, t)) ||
         (d3 == 0 && on_segment(t.a, s)) || (d4 == 0 && on_segment(t.b, s));
}

}  // namespace

std::vector<std::string> check_embedding(const LayeredCircuit& c, const Embedding& e) {
  std::vector<std::string> problems;
  if (e.size() != c.layers.size()) return {"embedding has the wrong number of layers"};
  std::vector<Point> points;
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    if (e[l].size() != c.layers[l].size()) return {"embedding misses gates"};
    points.insert(points.end(), e[l].begin(), e[l].end());
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (same(points[a], points[b])) problems.push_back("two gates share a point");
    }
  }

  std::vector<Segment> segments;
  for (std::size_t l = 0; l < c.layers.size(); ++l) {
    for (std::size_t j = 0; j < c.layers[l].size(); ++j) {
      for (const GateRef& p : c.layers[l][j].preds) {
        const Segment s{e.at(p.layer).at(p.index), e[l][j]};
        if (s.b.y <= s.a.y) problems.push_back(gate_name(l, j) + ": wire does not rise");
        segments.push_back(s);
      }
    }
  }
  std::sort(segments.begin(), segments.end(), [](const Segment& s, const Segment& t) {
    return std::min(s.a.y, s.b.y) < std::min(t.a.y, t.b.y);
  });
  for (std::size_t a = 0; a < segments.size(); ++a) {
    const long long top = std::max(segments[a].a.y, segments[a].b.y);
    for (std::size_t b = a + 1; b < segments.size(); ++b) {
      if (std::min(segments[b].a.y, segments[b].b.y) > top) break;
      if (bad_intersection(segments[a], segments[b])) {
        problems.push_back("wires cross");
      }
    }
    for (const Point& p : points) {
      const Segment& s = segments[a];
      if (!same(p, s.a) && !same(p, s.b) && on_segment(p, s)) {
        problems.push_back("wire passes through a gate");
      }
    }
  }
  return problems;
}

ValidationReport validate_transducer(const TransducerCircuit& t) {
  ValidationReport r = validate(t.circuit);
  auto fail = [&r](std::string msg) {
    r.transducer = false;
    r.violations.push_back(std::move(msg));
  };
  r.transducer = true;
  const auto& layers = t.circuit.layers;
  if (layers.size() < 2) {
    fail("transducer needs an input and an output layer");
    return r;
  }
  if (layers.front().size() != t.width) fail("bottom layer does not hold exactly the inputs");
  if (layers.back().size() != t.width) fail("top layer does not hold exactly the outputs");
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (const Gate& g : layers[l]) {
      if ((g.type == GateType::Input) != (l == 0)) {
        fail("input gates must be exactly the bottom layer");
        return r;
      }
    }
  }
  if (!r.upward_stratified()) fail("not upward stratified");
  return r;
}

TransducerCircuit identity_transducer(std::size_t width) {
  TransducerCircuit t;
  t.width = width;
  t.circuit.layers.resize(2);
  for (std::size_t j = 0; j < width; ++j) {
    t.circuit.layers[0].push_back(Gate{GateType::Input, {}});
    t.circuit.layers[1].push_back(Gate{GateType::Id, {GateRef{0, j}}});
  }
  return t;
}

BoolVec apply_transducer(const TransducerCircuit& t, const BoolVec& x) {
  if (x.size() != t.width) {
    throw std::invalid_argument("transducer width " + std::to_string(t.width) +
                                " applied to a vector of length " + std::to_string(x.size()));
  }
  const auto& layers = t.circuit.layers;
  std::vector<char> prev(x.raw());
  std::vector<char> cur;
  const std::vector<std::vector<char>> unused;
  for (std::size_t l = 1; l < layers.size(); ++l) {
    cur.assign(layers[l].size(), 0);
    for (std::size_t j = 0; j < layers[l].size(); ++j) {
      const Gate& g = layers[l][j];
      require_fan_in(g);
      for (const GateRef& p : g.preds) {
        if (p.layer + 1 != l || p.index >= prev.size()) {
          throw std::invalid_argument("transducer wire does not join adjacent layers");
        }
      }
      cur[j] = gate_value(g, unused, &prev) ? 1 : 0;
    }
    prev.swap(cur);
  }
  BoolVec out(t.width);
  out.raw() = std::move(prev);
  return out;
}

TransducerCircuit compose_transducers(const TransducerCircuit& outer,
                                      const TransducerCircuit& inner) {
  if (outer.width != inner.width) throw std::invalid_argument("transducer width mismatch");
  TransducerCircuit t;
  t.width = inner.width;
  t.padding = inner.padding + outer.padding;
  t.circuit.layers = inner.circuit.layers;
  const std::size_t offset = inner.circuit.layers.size() - 1;
  t.circuit.layers.reserve(offset + outer.circuit.layers.size());
  for (std::size_t l = 1; l < outer.circuit.layers.size(); ++l) {
    Layer layer = outer.circuit.layers[l];
    for (Gate& g : layer) {
      for (GateRef& p : g.preds) p.layer += offset;
    }
    t.circuit.layers.push_back(std::move(layer));
  }
  t.circuit.output = outer.circuit.output;
  return t;
}

TransducerCircuit dualize(const TransducerCircuit& t) {
  TransducerCircuit d = t;
  for (Layer& layer : d.circuit.layers) {
    for (Gate& g : layer) {
      switch (g.type) {
        case GateType::And: g.type = GateType::Or; break;
        case GateType::Or: g.type = GateType::And; break;
        case GateType::Zero: g.type = GateType::One; break;
        case GateType::One: g.type = GateType::Zero; break;
        case GateType::Xor: throw std::invalid_argument("cannot dualize an XOR gate");
        default: break;
      }
    }
  }
  return d;
}

TransducerCircuit mirror(const TransducerCircuit& t) {
  TransducerCircuit m = t;
  auto& layers = m.circuit.layers;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::reverse(layers[l].begin(), layers[l].end());
    for (Gate& g : layers[l]) {
      for (GateRef& p : g.preds) p.index = t.circuit.layers[p.layer].size() - 1 - p.index;
      std::reverse(g.preds.begin(), g.preds.end());
    }
  }
  m.circuit.output = layers.back().size() - 1 - t.circuit.output;
  return m;
}

}  // namespace mtlpc
