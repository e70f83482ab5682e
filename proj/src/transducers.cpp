#include "mtlpc/transducers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mtlpc {

std::optional<std::pair<std::size_t, std::size_t>> Window::span(std::size_t pos) const {
  const WindowEntry& e = at(pos);
  if (!e.first) return std::nullopt;
  const std::size_t lo = *e.first;
  const std::size_t hi = std::min(*e.last, e.seg);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

Window compute_window(const Trace& trace, const Interval& interval, const BoolVec& s) {
  const std::size_t n = trace.size();
  if (s.size() != n) throw std::invalid_argument("constant vector length differs from trace");
  const TickInterval in = trace.scale(interval);

  // next_true[j] = least j' >= j with s(j'), n+1 if none; seg is the same for !s.
  std::vector<std::size_t> next_true(n + 2, n + 1);
  std::vector<std::size_t> next_false(n + 2, n + 1);
  for (std::size_t j = n; j >= 1; --j) {
    next_true[j] = s(j) ? j : next_true[j + 1];
    next_false[j] = s(j) ? next_false[j + 1] : j;
  }

  std::vector<WindowEntry> entries(n);
  for (std::size_t i = 1; i <= n; ++i) {
    WindowEntry& e = entries[i - 1];
    e.seg = next_false[i];
    std::size_t first = i;
    std::size_t last = n;
    if (!in.is_trivial()) {
      auto diff = [&](std::size_t j) { return BigInt(trace.ticks(j) - trace.ticks(i)); };
      // Differences grow with j, so "below the interval" and "not past it" are
      // both prefixes of [i, n].
      std::size_t lo = i;
      std::size_t hi = n + 1;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const BigInt d = diff(mid);
        if (!in.contains(d) && !in.past_upper(d)) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      first = lo;
      lo = i;
      hi = n + 1;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (!in.past_upper(diff(mid))) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      last = lo - 1;
      if (first > n || first > last || !in.contains(diff(first))) continue;
    }
    e.first = first;
    e.last = last;
    if (next_true[first] <= last) e.limit = next_true[first];
  }
  return Window(std::move(entries));
}

namespace {

struct OutputRule {
  bool constant = true;
  bool value = false;
  std::size_t p = 0;
  std::size_t q = 0;
};

using Span = std::pair<std::size_t, std::size_t>;

// Outputs are constants or combine(x_p..x_q) over spans whose ends are
// nondecreasing in the output position. Layer h holds every length-h interval
// inside some span, built from its two length-(h-1) sub-intervals, plus one ID
// carrier per shorter span so that all wires join adjacent layers.
TransducerCircuit build_lattice(std::size_t n, GateType combine,
                                const std::vector<OutputRule>& rules) {
  std::vector<Span> spans;
  for (const OutputRule& r : rules) {
    if (!r.constant) spans.emplace_back(r.p, r.q);
  }
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());

  // reach[a] = largest right end of a span starting at or before a.
  std::vector<std::size_t> reach(n + 2, 0);
  std::size_t height = 0;
  {
    std::size_t k = 0;
    std::size_t best = 0;
    for (std::size_t a = 1; a <= n; ++a) {
      while (k < spans.size() && spans[k].first <= a) best = std::max(best, spans[k++].second);
      reach[a] = best;
    }
    for (const Span& sp : spans) height = std::max(height, sp.second - sp.first + 1);
  }

  TransducerCircuit t;
  t.width = n;
  auto& layers = t.circuit.layers;
  layers.assign(height + 2, Layer{});
  for (std::size_t j = 0; j < n; ++j) layers[0].push_back(Gate{GateType::Input, {}});

  std::map<Span, std::size_t> below;
  for (std::size_t h = 1; h <= height; ++h) {
    std::vector<Span> items;
    for (std::size_t a = 1; a <= n; ++a) {
      if (reach[a] >= a && reach[a] - a + 1 >= h) items.emplace_back(a, a + h - 1);
    }
    for (const Span& sp : spans) {
      if (sp.second - sp.first + 1 < h) items.push_back(sp);
    }
    std::sort(items.begin(), items.end());
    std::map<Span, std::size_t> here;
    for (const Span& it : items) {
      Gate g;
      const std::size_t len = it.second - it.first + 1;
      if (len == h && h == 1) {
        g.type = GateType::Id;
        g.preds = {GateRef{0, it.first - 1}};
      } else if (len == h) {
        g.type = combine;
        g.preds = {GateRef{h - 1, below.at({it.first, it.second - 1})},
                   GateRef{h - 1, below.at({it.first + 1, it.second})}};
      } else {
        g.type = GateType::Id;
        g.preds = {GateRef{h - 1, below.at(it)}};
        ++t.padding;
      }
      here.emplace(it, layers[h].size());
      layers[h].push_back(std::move(g));
    }
    below = std::move(here);
  }

  Layer& top = layers[height + 1];
  for (const OutputRule& r : rules) {
    if (r.constant) {
      top.push_back(Gate{r.value ? GateType::One : GateType::Zero, {}});
    } else {
      top.push_back(Gate{GateType::Id, {GateRef{height, below.at({r.p, r.q})}}});
    }
  }
  attach_constants(t.circuit, height + 1);
  return t;
}

OutputRule constant(bool v) { return OutputRule{true, v, 0, 0}; }
OutputRule over(std::size_t p, std::size_t q) { return OutputRule{false, false, p, q}; }

}  // namespace

TransducerCircuit build_until_left(const BoolVec& s, const Interval& interval, const Trace& trace) {
  const Window w = compute_window(trace, interval, s);
  std::vector<OutputRule> rules;
  for (std::size_t i = 1; i <= trace.size(); ++i) {
    const auto sp = w.span(i);
    rules.push_back(sp ? over(sp->first, sp->second) : constant(false));
  }
  return build_lattice(trace.size(), GateType::Or, rules);
}

TransducerCircuit build_until_right(const BoolVec& s, const Interval& interval,
                                    const Trace& trace) {
  const Window w = compute_window(trace, interval, s);
  std::vector<OutputRule> rules;
  for (std::size_t i = 1; i <= trace.size(); ++i) {
    const auto& limit = w.at(i).limit;
    if (!limit) {
      rules.push_back(constant(false));
    } else if (*limit == i) {
      rules.push_back(constant(true));
    } else {
      rules.push_back(over(i, *limit - 1));
    }
  }
  return build_lattice(trace.size(), GateType::And, rules);
}

TransducerCircuit build_dual(DualOp op, const BoolVec& s, const Interval& interval,
                             const Trace& trace) {
  switch (op) {
    // s R x = !(!s U !x); x R s = !(!x U !s)
    case DualOp::ReleaseLeft: return dualize(build_until_left(~s, interval, trace));
    case DualOp::ReleaseRight: return dualize(build_until_right(~s, interval, trace));
    // Past operators are the future ones on the reversed trace, read backwards.
    case DualOp::SinceLeft:
      return mirror(build_until_left(s.reversed(), interval, trace.reversed()));
    case DualOp::SinceRight:
      return mirror(build_until_right(s.reversed(), interval, trace.reversed()));
    case DualOp::TriggerLeft:
      return dualize(mirror(build_until_left((~s).reversed(), interval, trace.reversed())));
    case DualOp::TriggerRight:
      return dualize(mirror(build_until_right((~s).reversed(), interval, trace.reversed())));
  }
  throw std::logic_error("unhandled dual operator");
}

TransducerCircuit build_pointwise(PointwiseOp op, const std::optional<BoolVec>& s,
                                  const Interval& interval, const Trace& trace) {
  const std::size_t n = trace.size();
  const bool boolean =
      op == PointwiseOp::AndConst || op == PointwiseOp::OrConst || op == PointwiseOp::XorConst;
  if (boolean && (!s || s->size() != n)) {
    throw std::invalid_argument("pointwise Boolean circuit needs a constant of length n");
  }
  TransducerCircuit t;
  t.width = n;
  auto& layers = t.circuit.layers;
  layers.resize(2);
  for (std::size_t j = 0; j < n; ++j) layers[0].push_back(Gate{GateType::Input, {}});
  auto wire = [](GateType type, std::size_t src) { return Gate{type, {GateRef{0, src}}}; };
  for (std::size_t i = 1; i <= n; ++i) {
    Gate g;
    switch (op) {
      case PointwiseOp::AndConst:
        g = (*s)(i) ? wire(GateType::Id, i - 1) : Gate{GateType::Zero, {}};
        break;
      case PointwiseOp::OrConst:
        g = (*s)(i) ? Gate{GateType::One, {}} : wire(GateType::Id, i - 1);
        break;
      case PointwiseOp::XorConst:
        g = wire((*s)(i) ? GateType::Not : GateType::Id, i - 1);
        break;
      case PointwiseOp::Next:
      case PointwiseOp::WeakNext: {
        const GateType fallback = op == PointwiseOp::Next ? GateType::Zero : GateType::One;
        g = (i < n && trace.difference_in(i, i + 1, interval)) ? wire(GateType::Id, i)
                                                                : Gate{fallback, {}};
        break;
      }
      case PointwiseOp::Yesterday:
      case PointwiseOp::WeakYesterday: {
        const GateType fallback = op == PointwiseOp::Yesterday ? GateType::Zero : GateType::One;
        g = (i > 1 && trace.difference_in(i - 1, i, interval)) ? wire(GateType::Id, i - 2)
                                                                : Gate{fallback, {}};
        break;
      }
    }
    layers[1].push_back(std::move(g));
  }
  if (n > 0) attach_constants(t.circuit, 1);
  return t;
}

TransducerCircuit build_unary(UnaryTemporal op, const Interval& interval, const Trace& trace) {
  const std::size_t n = trace.size();
  switch (op) {
    case UnaryTemporal::Eventually: return build_until_left(BoolVec(n, true), interval, trace);
    case UnaryTemporal::Always:
      return build_dual(DualOp::ReleaseLeft, BoolVec(n, false), interval, trace);
    case UnaryTemporal::Once:
      return build_dual(DualOp::SinceLeft, BoolVec(n, true), interval, trace);
    case UnaryTemporal::Historically:
      return build_dual(DualOp::TriggerLeft, BoolVec(n, false), interval, trace);
  }
  throw std::logic_error("unhandled unary operator");
}

}  // namespace mtlpc
