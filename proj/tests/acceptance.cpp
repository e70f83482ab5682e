// Acceptance gate: runs criteria 1-9 and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mtlpc/circuit.hpp"
#include "mtlpc/contraction.hpp"
#include "mtlpc/cvp_reduce.hpp"
#include "mtlpc/dp_eval.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/transducers.hpp"
#include "mtlpc/utl.hpp"
#include "support.hpp"

using namespace mtlpc;
using support::from_mask;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// Structural audit shared by criteria 3-6 and reported as criterion 7.
struct Audit {
  std::mutex mu;
  std::size_t transducers = 0;
  std::size_t monotone_vectors = 0;
  Outcome outcome;

  void transducer(const TransducerCircuit& c, bool want_monotone, const std::string& where) {
    const ValidationReport r = validate_transducer(c);
    std::lock_guard<std::mutex> lock(mu);
    ++transducers;
    if (!r.upward_stratified() || !r.ok()) {
      outcome.fail(where + ": " + (r.violations.empty() ? "invalid" : r.violations.front()));
    } else if (want_monotone && !r.monotone) {
      outcome.fail(where + ": non-monotone gate without xor");
    }
  }
};

Audit audit;

// F/G/O/H subformulae with [0,inf) or [a,inf) intervals, evaluated through the
// monotone-vector path and compared with the evaluator.
void audit_monotone(const Trace& t, const Formula& f) {
  switch (f.op()) {
    case Op::Eventually:
    case Op::Always:
    case Op::Once:
    case Op::Historically:
      if (f.interval().is_unbounded()) {
        TemporalOp op;
        op.kind = f.op() == Op::Eventually ? TemporalKind::Eventually
                  : f.op() == Op::Always   ? TemporalKind::Always
                  : f.op() == Op::Once     ? TemporalKind::Once
                                           : TemporalKind::Historically;
        op.interval = f.interval();
        const MonotoneVec m = temporal_to_monotone(op, t, eval(t, f.lhs()));
        std::lock_guard<std::mutex> lock(audit.mu);
        ++audit.monotone_vectors;
        if (!m.is_canonical() || m.expand() != eval(t, f)) {
          audit.outcome.fail("monotone audit failed on " + print_formula(f));
        }
      }
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < f.arity(); ++k) audit_monotone(t, f.child(k));
}

bool has_xor(const Formula& f) {
  if (f.op() == Op::Xor) return true;
  for (std::size_t k = 0; k < f.arity(); ++k) {
    if (has_xor(f.child(k))) return true;
  }
  return false;
}

Interval random_interval(Rng& rng) {
  const std::uint64_t lo = uniform(rng, 0, 4);
  if (chance(rng, 25)) return Interval::at_least(lo, chance(rng, 50));
  const std::uint64_t hi = lo + uniform(rng, 0, 5);
  if (hi == lo) return Interval::make(lo, hi);
  return Interval::make(lo, hi, chance(rng, 50), chance(rng, 50));
}

// --- criteria ----------------------------------------------------------------

Outcome block_updates() {
  Outcome out;
  Trace::PropositionMap props;
  props.emplace("r", BoolVec::from_bits({0, 1, 1, 1, 0, 0, 0}));
  props.emplace("chi_3_4", chi(3, 4, 7));
  props.emplace("chi_4_5", chi(4, 5, 7));
  const Trace t = Trace::untimed(7, props);
  const BoolVec until = eval(t, parse_formula("chi_3_4 U r"));
  const BoolVec since = eval(t, parse_formula("chi_4_5 S (chi_3_4 U r)"));
  if (until.to_string() != "0111000") out.fail("chi_3_4 U r gave " + until.to_string());
  if (since.to_string() != "0111100") out.fail("chi_4_5 S (...) gave " + since.to_string());
  return out;
}

Outcome or_circuit_blocks() {
  Outcome out;
  auto or_gate = [](std::vector<std::size_t> preds) {
    Gate g{GateType::Or, {}};
    for (std::size_t p : preds) g.preds.push_back(GateRef{0, p});
    return g;
  };
  LayeredCircuit c;
  c.layers = {{Gate{}, Gate{}, Gate{}}, {or_gate({0, 1}), or_gate({1, 2}), or_gate({2})}, {}};
  Gate g{GateType::Or, {GateRef{1, 0}, GateRef{1, 1}, GateRef{1, 2}}};
  c.layers[2].push_back(g);
  const BoolVec in = BoolVec::from_bits({0, 1, 0});
  const Reduction red = reduce(c, in);
  const std::vector<std::vector<Block>> want = {
      {{1, 1}, {2, 4}, {5, 7}}, {{1, 2}, {3, 5}, {6, 7}}, {{1, 7}}};
  if (red.blocks.blocks != want) out.fail("blocks differ");
  if (red.blocks.k[1][1] != 4) out.fail("k(e) = " + std::to_string(red.blocks.k[1][1]));
  if (red.blocks.length != 7 || c.wire_count() != 8) out.fail("length or wire count differs");
  if (!check(red.trace, red.formula) || !output_value(c, in)) out.fail("reduced value differs");
  return out;
}

Outcome until_left_example() {
  Outcome out;
  const Trace t({"1", "2", "3", "4", "5", "6", "8.5"}, {});
  const TransducerCircuit c =
      build_until_left(BoolVec::from_bits({0, 1, 1, 1, 1, 1, 0}), Interval::make(1, 5), t);
  audit.transducer(c, true, "until-left example");
  for (unsigned bits = 0; bits < 128; ++bits) {
    const BoolVec x = from_mask(bits, 7);
    auto any = [&](std::size_t lo, std::size_t hi) {
      bool v = false;
      for (std::size_t j = lo; j <= hi; ++j) v = v || x(j);
      return v ? 1 : 0;
    };
    const BoolVec want = BoolVec::from_bits({0, any(3, 6), any(4, 6), any(5, 7), any(6, 7), any(7, 7), 0});
    const BoolVec got = apply_transducer(c, x);
    if (got != want) out.fail("input " + x.to_string() + " gave " + got.to_string());
  }
  return out;
}

Outcome until_builders() {
  Outcome out;
  Rng rng(1003);
  for (int round = 0; round < 500 && out.ok; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 10);
    tp.propositions = {"s"};
    tp.max_step = 4;
    const Trace t = random_trace(rng, tp);
    const std::size_t n = t.size();
    const BoolVec s = t.prop("s");
    const Interval iv = random_interval(rng);
    const TransducerCircuit left = build_until_left(s, iv, t);
    const TransducerCircuit right = build_until_right(s, iv, t);
    audit.transducer(left, true, "until-left");
    audit.transducer(right, true, "until-right");
    const Formula fl = parse_formula("s U" + iv.to_string() + " x");
    const Formula fr = parse_formula("x U" + iv.to_string() + " s");
    const bool exhaustive = n <= 8;
    const std::size_t count = exhaustive ? (std::size_t{1} << n) : 200;
    for (std::size_t k = 0; k < count; ++k) {
      const BoolVec x = exhaustive ? from_mask(k, n) : random_inputs(rng, n);
      const Trace tx = t.with_proposition("x", x);
      if (apply_transducer(left, x) != eval(tx, fl)) {
        out.fail("left until differs, " + print_formula(fl) + " x=" + x.to_string());
      }
      if (apply_transducer(right, x) != eval(tx, fr)) {
        out.fail("right until differs, " + print_formula(fr) + " x=" + x.to_string());
      }
    }
  }
  return out;
}

Outcome engine_equivalence() {
  Outcome out;
  Rng rng(1005);
  for (int round = 0; round < 1000 && out.ok; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 64);
    const Trace t = random_trace(rng, tp);
    FormulaParams fp;
    fp.fragment = round % 2 ? Fragment::MTL : Fragment::MTL_XOR;
    fp.size = uniform(rng, 1, 32);
    const Formula f = random_formula(rng, fp);
    const bool monotone = !has_xor(f);
    ContractionOptions o;
    o.observer = [&](const TransducerCircuit& c) { audit.transducer(c, monotone, "run_mtl"); };
    if (run_mtl(t, f, o) != eval(t, f)) out.fail("run_mtl differs on " + print_formula(f));
  }
  for (int round = 0; round < 1000 && out.ok; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 64);
    const Trace t = random_trace(rng, tp);
    FormulaParams fp;
    fp.fragment = round % 2 ? Fragment::UTL : Fragment::UTL_GEQ;
    fp.size = uniform(rng, 1, 32);
    const Formula f = random_formula(rng, fp);
    if (run_utl(t, f) != eval(t, f)) out.fail("run_utl differs on " + print_formula(f));
    audit_monotone(t, f);
  }
  return out;
}

Outcome reduction_round_trip() {
  Outcome out;
  Rng rng(1006);
  for (int round = 0; round < 700 && out.ok; ++round) {
    const bool with_not = round >= 500;
    CircuitParams p;
    p.layers = uniform(rng, 2, 8);
    p.max_width = uniform(rng, 1, 10);
    p.not_percent = with_not ? 25 : 0;
    const LayeredCircuit c = random_circuit(rng, p);
    const BoolVec in = random_inputs(rng, c.input_gates().size());
    const Reduction red = reduce(c, in, with_not);
    const bool want = output_value(c, in);
    const std::string tag = "circuit " + std::to_string(round);
    if (check(red.trace, red.formula) != want) out.fail(tag + ": dp_eval differs");
    ContractionOptions o;
    o.observer = [&](const TransducerCircuit& t) { audit.transducer(t, !with_not, "reduction"); };
    if (run_mtl(red.trace, red.formula, o)(1) != want) out.fail(tag + ": run_mtl differs");
    if (const auto problems = check_blocks(red.circuit, red.blocks); !problems.empty()) {
      out.fail(tag + ": " + problems.front());
    }
    if (const auto problems = check_telescoping(red); !problems.empty()) {
      out.fail(tag + ": " + problems.front());
    }
    if (red.trace.size() > red.circuit.wire_count() && red.circuit.wire_count() > 0) {
      out.fail(tag + ": trace longer than the wire count");
    }
    if (red.trace.propositions().size() > 2 * red.circuit.gate_count()) {
      out.fail(tag + ": too many propositions");
    }
  }
  return out;
}

Outcome determinism() {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 200 && out.ok; ++seed) {
    Rng rng(seed);
    TraceParams tp;
    tp.length = uniform(rng, 1, 64);
    const Trace t = random_trace(rng, tp);
    FormulaParams fp;
    fp.fragment = seed % 3 == 0 ? Fragment::UTL_GEQ : Fragment::MTL_XOR;
    fp.size = uniform(rng, 1, 32);
    const Formula f = random_formula(rng, fp);
    std::vector<BoolVec> results;
    for (unsigned w : {1u, 2u, 8u}) {
      ContractionOptions o;
      o.workers = w;
      ContractionStats stats;
      results.push_back(run_mtl(t, f, o, &stats));
      if (stats.rounds > round_bound(stats.leaves)) {
        out.fail("seed " + std::to_string(seed) + ": " + std::to_string(stats.rounds) +
                 " rounds for " + std::to_string(stats.leaves) + " leaves");
      }
      if (is_unary_fragment(classify_fragment(f))) {
        UtlOptions u;
        u.workers = w;
        ContractionStats ustats;
        results.push_back(run_utl(t, f, u, &ustats));
        if (ustats.rounds > round_bound(ustats.leaves)) out.fail("utl round bound exceeded");
      }
    }
    for (const BoolVec& r : results) {
      if (r != results.front()) out.fail("seed " + std::to_string(seed) + ": worker counts differ");
    }
  }
  return out;
}

Outcome filter_algebra() {
  Outcome out;
  Rng rng(1009);
  for (int round = 0; round < 100 && out.ok; ++round) {
    const std::size_t n = uniform(rng, 1, 12);
    const Filter a = support::random_filter(rng, n, 4);
    const Filter b = support::random_filter(rng, n, 4);
    const Filter ab = compose_filters(a, b);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      const BoolVec x = from_mask(bits, n);
      if (ab.apply(x) != a.apply(b.apply(x))) out.fail("filter pair " + std::to_string(round));
    }
  }
  for (int round = 0; round < 100 && out.ok; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 10);
    tp.propositions = {};
    const Trace t = random_trace(rng, tp);
    const std::size_t n = t.size();
    std::vector<std::variant<Filter, TemporalOp>> steps;
    const std::size_t count = uniform(rng, 1, 8);
    for (std::size_t k = 0; k < count; ++k) {
      if (chance(rng, 50)) {
        steps.emplace_back(support::random_filter(rng, n));
      } else {
        steps.emplace_back(support::random_temporal(rng));
      }
    }
    auto fold = [&](std::size_t from, std::size_t to) {
      UtlFn h(Filter::identity(n));
      for (std::size_t k = from; k < to; ++k) {
        if (const auto* f = std::get_if<Filter>(&steps[k])) {
          h = compose_utl(*f, h);
        } else {
          h = compose_utl(std::get<TemporalOp>(steps[k]), h, t);
        }
      }
      return h;
    };
    const UtlFn whole = fold(0, count);
    const std::size_t cut = uniform(rng, 0, count);
    const UtlFn split = compose_utl(fold(cut, count), fold(0, cut), t);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      const BoolVec x = from_mask(bits, n);
      BoolVec want = x;
      for (const auto& step : steps) {
        if (const auto* f = std::get_if<Filter>(&step)) {
          want = f->apply(want);
        } else {
          const TemporalOp& op = std::get<TemporalOp>(step);
          if (!temporal_to_monotone(op, t, want).is_canonical()) {
            out.fail("non-canonical monotone vector");
          }
          want = support::apply_temporal(op, t, want);
        }
      }
      if (whole.apply(x, t) != want || split.apply(x, t) != want) {
        out.fail("pipeline " + std::to_string(round) + " on " + x.to_string());
      }
    }
  }
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "block update example vectors", 1, block_updates},
      {2, "seven-gate OR circuit: blocks, counts and length", 1, or_circuit_blocks},
      {3, "until circuit with constant left operand, all 2^7 inputs", 1, until_left_example},
      {4, "500 random until circuits against dp_eval", 60, until_builders},
      {5, "engine equivalence, 1000 MTL and 1000 UTL instances", 120, engine_equivalence},
      {6, "circuit reduction round trip, 500 monotone and 200 with NOT", 120,
       reduction_round_trip},
      {8, "worker determinism and round bound over 200 seeds", 0, determinism},
      {9, "filter composition and staged pipelines", 60, filter_algebra},
  };

  int failures = 0;
  auto print = [&](int number, const char* name, const Outcome& o, double seconds) {
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, name,
                seconds, o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  };

  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.fail("took longer than " + std::to_string(c.limit_seconds) + " s");
    }
    print(c.number, c.name, o, seconds);
    if (c.number == 6) {
      std::ostringstream name;
      name << "structural audit of " << audit.transducers << " transducers and "
           << audit.monotone_vectors << " monotone vectors";
      const std::string text = name.str();
      print(7, text.c_str(), audit.outcome, 0);
    }
  }
  return failures == 0 ? 0 : 1;
}
