#include <gtest/gtest.h>

#include "mtlpc/circuit.hpp"
#include "mtlpc/dp_eval.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/transducers.hpp"

using namespace mtlpc;

namespace {

Gate gate(GateType t, std::vector<std::size_t> preds, std::size_t layer) {
  Gate g{t, {}};
  for (std::size_t p : preds) g.preds.push_back(GateRef{layer - 1, p});
  return g;
}

BoolVec from_mask(unsigned bits, std::size_t n) {
  BoolVec v(n);
  for (std::size_t i = 1; i <= n; ++i) v.set(i, (bits >> (i - 1)) & 1);
  return v;
}

// Trace and operand of the left-constant until example.
Trace window_trace() { return Trace({"1", "2", "3", "4", "5", "6", "8.5"}, {}); }

}  // namespace

TEST(Circuit, ValidateAcceptsPlanarLayers) {
  LayeredCircuit c;
  c.layers = {{Gate{}, Gate{}, Gate{}},
              {gate(GateType::Or, {0, 1}, 1), gate(GateType::And, {1, 2}, 1)},
              {gate(GateType::Or, {0, 1}, 2)}};
  const ValidationReport r = validate(c);
  EXPECT_TRUE(r.upward_stratified()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(r.monotone);
  EXPECT_TRUE(check_embedding(c, layer_embedding(c)).empty());
  EXPECT_EQ(c.wire_count(), 6u);
  EXPECT_TRUE(output_value(c, BoolVec::from_string("011")));
  EXPECT_FALSE(output_value(c, BoolVec::from_string("001")));
}

TEST(Circuit, ValidateFindsCrossingsAndGaps) {
  LayeredCircuit crossing;
  crossing.layers = {{Gate{}, Gate{}, Gate{}},
                     {gate(GateType::Id, {2}, 1), gate(GateType::Id, {0}, 1)},
                     {gate(GateType::Or, {0, 1}, 2)}};
  const ValidationReport r1 = validate(crossing);
  EXPECT_FALSE(r1.non_crossing);
  EXPECT_FALSE(check_embedding(crossing, layer_embedding(crossing)).empty());

  LayeredCircuit gap;
  gap.layers = {{Gate{}, Gate{}, Gate{}}, {gate(GateType::Or, {0, 2}, 1)}};
  EXPECT_FALSE(validate(gap).contiguous);

  LayeredCircuit skip;
  skip.layers = {{Gate{}}, {gate(GateType::Id, {0}, 1)}, {Gate{GateType::Or, {GateRef{0, 0}}}}};
  EXPECT_FALSE(validate(skip).layered);

  LayeredCircuit high_input;
  high_input.layers = {{Gate{}}, {Gate{}}};
  EXPECT_FALSE(validate(high_input).stratified);

  LayeredCircuit negation;
  negation.layers = {{Gate{}}, {gate(GateType::Not, {0}, 1)}};
  EXPECT_FALSE(validate(negation).monotone);
  EXPECT_TRUE(validate(negation).upward_layered());
}

TEST(Circuit, RandomCircuitsValidate) {
  Rng rng(4);
  for (int round = 0; round < 200; ++round) {
    CircuitParams p;
    p.layers = uniform(rng, 2, 8);
    p.max_width = uniform(rng, 1, 10);
    p.not_percent = round % 2 ? 30 : 0;
    const LayeredCircuit c = random_circuit(rng, p);
    const ValidationReport r = validate(c);
    EXPECT_TRUE(r.upward_layered());
    if (p.not_percent == 0) EXPECT_TRUE(r.monotone);
    EXPECT_TRUE(check_embedding(c, layer_embedding(c)).empty());
  }
}

TEST(Circuit, AttachConstantsKeepsValuesAndPlanarity) {
  Rng rng(9);
  for (int round = 0; round < 200; ++round) {
    CircuitParams p;
    p.layers = uniform(rng, 2, 6);
    p.max_width = uniform(rng, 1, 6);
    p.const_percent = 40;
    LayeredCircuit c = random_circuit(rng, p);
    const BoolVec in = random_inputs(rng, c.input_gates().size());
    const CircuitValues before = evaluate(c, in);
    for (std::size_t l = 1; l < c.layers.size(); ++l) attach_constants(c, l);
    EXPECT_EQ(evaluate(c, in), before);
    const ValidationReport r = validate(c);
    EXPECT_TRUE(r.upward_stratified()) << (r.violations.empty() ? "" : r.violations.front());
  }
}

TEST(Circuit, EvaluateChecksInputCount) {
  LayeredCircuit c;
  c.layers = {{Gate{}, Gate{}}, {gate(GateType::And, {0, 1}, 1)}};
  EXPECT_THROW(evaluate(c, BoolVec(3)), std::invalid_argument);
}

TEST(Transducer, IdentityComposeDualMirror) {
  const Trace t = window_trace();
  const BoolVec s = BoolVec::from_string("0111110");
  const TransducerCircuit a = build_until_left(s, Interval::make(1, 5), t);
  const TransducerCircuit b = build_until_right(BoolVec::from_string("0010011"),
                                                Interval::make(0, 3), t);
  const TransducerCircuit ab = compose_transducers(a, b);
  const TransducerCircuit id = identity_transducer(7);
  EXPECT_TRUE(validate_transducer(ab).ok());
  EXPECT_TRUE(validate_transducer(id).ok());
  for (unsigned bits = 0; bits < 128; ++bits) {
    const BoolVec x = from_mask(bits, 7);
    EXPECT_EQ(apply_transducer(id, x), x);
    EXPECT_EQ(apply_transducer(ab, x), apply_transducer(a, apply_transducer(b, x)));
    EXPECT_EQ(apply_transducer(dualize(a), x), ~apply_transducer(a, ~x));
    EXPECT_EQ(apply_transducer(mirror(a), x),
              apply_transducer(a, x.reversed()).reversed());
  }
  EXPECT_THROW(compose_transducers(a, identity_transducer(6)), std::invalid_argument);
}

TEST(Transducer, UntilLeftWorkedExample) {
  const Trace t = window_trace();
  const BoolVec s = BoolVec::from_string("0111110");
  const TransducerCircuit c = build_until_left(s, Interval::make(1, 5), t);
  ASSERT_TRUE(validate_transducer(c).ok());
  EXPECT_TRUE(validate(c.circuit).monotone);
  for (unsigned bits = 0; bits < 128; ++bits) {
    const BoolVec x = from_mask(bits, 7);
    auto any = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j = lo; j <= hi; ++j) {
        if (x(j)) return true;
      }
      return false;
    };
    const BoolVec want =
        BoolVec::from_bits({0, any(3, 6), any(4, 6), any(5, 7), any(6, 7), any(7, 7), 0});
    EXPECT_EQ(apply_transducer(c, x), want) << x.to_string();
  }
}

TEST(Transducer, UntilRightWorkedExample) {
  const Trace t = window_trace();
  const BoolVec s = BoolVec::from_string("0111110");
  const Interval iv = Interval::make(1, 5);
  const TransducerCircuit c = build_until_right(s, iv, t);
  ASSERT_TRUE(validate_transducer(c).ok());
  for (unsigned bits = 0; bits < 128; ++bits) {
    const BoolVec x = from_mask(bits, 7);
    const Trace tx = t.with_proposition("x", x).with_proposition("s", s);
    EXPECT_EQ(apply_transducer(c, x), eval(tx, parse_formula("x U[1,5] s")));
  }
  // The last two positions have no s-witness inside their window.
  for (unsigned bits = 0; bits < 128; ++bits) {
    const BoolVec out = apply_transducer(c, from_mask(bits, 7));
    EXPECT_FALSE(out(6));
    EXPECT_FALSE(out(7));
  }
}

TEST(Transducer, AllBuildersMatchDp) {
  Rng rng(23);
  const char* left_forms[] = {"s U%I x", "s R%I x", "s S%I x", "s T%I x"};
  const char* right_forms[] = {"x U%I s", "x R%I s", "x S%I s", "x T%I s"};
  const DualOp left_ops[] = {DualOp::ReleaseLeft, DualOp::SinceLeft, DualOp::TriggerLeft};
  const DualOp right_ops[] = {DualOp::ReleaseRight, DualOp::SinceRight, DualOp::TriggerRight};
  for (int round = 0; round < 150; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 7);
    tp.propositions = {"s"};
    const Trace t = random_trace(rng, tp);
    const BoolVec s = t.prop("s");
    const std::uint64_t lo = uniform(rng, 0, 3);
    const bool inf = chance(rng, 25);
    const std::uint64_t hi = lo + uniform(rng, 0, 4);
    const bool lo_closed = chance(rng, 50);
    const bool hi_closed = chance(rng, 50);
    Interval iv;
    if (inf) {
      iv = Interval::at_least(lo, lo_closed);
    } else if (lo == hi) {
      iv = Interval::make(lo, hi);
    } else {
      iv = Interval::make(lo, hi, lo_closed, hi_closed);
    }
    std::vector<TransducerCircuit> left{build_until_left(s, iv, t)};
    std::vector<TransducerCircuit> right{build_until_right(s, iv, t)};
    for (DualOp op : left_ops) left.push_back(build_dual(op, s, iv, t));
    for (DualOp op : right_ops) right.push_back(build_dual(op, s, iv, t));
    const std::string suffix = iv.to_string();
    for (unsigned bits = 0; bits < (1u << t.size()); ++bits) {
      const BoolVec x = from_mask(bits, t.size());
      const Trace tx = t.with_proposition("x", x);
      for (int k = 0; k < 4; ++k) {
        for (int side = 0; side < 2; ++side) {
          std::string text = side == 0 ? left_forms[k] : right_forms[k];
          text.replace(text.find("%I"), 2, suffix);
          const TransducerCircuit& c = side == 0 ? left[k] : right[k];
          ASSERT_EQ(apply_transducer(c, x), eval(tx, parse_formula(text)))
              << text << " on " << x.to_string();
        }
      }
    }
    for (const auto* group : {&left, &right}) {
      for (const TransducerCircuit& c : *group) {
        const ValidationReport r = validate_transducer(c);
        ASSERT_TRUE(r.ok() && r.monotone) << (r.violations.empty() ? "" : r.violations.front());
      }
    }
  }
}

TEST(Transducer, PointwiseAndUnaryBuilders) {
  Rng rng(29);
  for (int round = 0; round < 60; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 6);
    tp.propositions = {"s"};
    const Trace t = random_trace(rng, tp);
    const BoolVec s = t.prop("s");
    const Interval iv = chance(rng, 50) ? Interval() : Interval::make(0, uniform(rng, 1, 3));
    const std::string sfx = iv.to_string();
    const std::vector<std::pair<TransducerCircuit, std::string>> cases = {
        {build_pointwise(PointwiseOp::AndConst, s, {}, t), "x & s"},
        {build_pointwise(PointwiseOp::OrConst, s, {}, t), "x | s"},
        {build_pointwise(PointwiseOp::XorConst, s, {}, t), "x ^ s"},
        {build_pointwise(PointwiseOp::Next, std::nullopt, iv, t), "X" + sfx + " x"},
        {build_pointwise(PointwiseOp::Yesterday, std::nullopt, iv, t), "Y" + sfx + " x"},
        {build_pointwise(PointwiseOp::WeakNext, std::nullopt, iv, t), "!X" + sfx + " !x"},
        {build_pointwise(PointwiseOp::WeakYesterday, std::nullopt, iv, t), "!Y" + sfx + " !x"},
        {build_unary(UnaryTemporal::Eventually, iv, t), "F" + sfx + " x"},
        {build_unary(UnaryTemporal::Always, iv, t), "G" + sfx + " x"},
        {build_unary(UnaryTemporal::Once, iv, t), "O" + sfx + " x"},
        {build_unary(UnaryTemporal::Historically, iv, t), "H" + sfx + " x"},
    };
    for (unsigned bits = 0; bits < (1u << t.size()); ++bits) {
      const BoolVec x = from_mask(bits, t.size());
      const Trace tx = t.with_proposition("x", x);
      for (const auto& [c, text] : cases) {
        ASSERT_EQ(apply_transducer(c, x), eval(tx, parse_formula(text))) << text;
      }
    }
    for (const auto& [c, text] : cases) EXPECT_TRUE(validate_transducer(c).ok()) << text;
  }
}

TEST(Transducer, WindowSpans) {
  const Trace t = window_trace();
  const Window w = compute_window(t, Interval::make(1, 5), BoolVec::from_string("0111110"));
  EXPECT_FALSE(w.span(1).has_value());
  EXPECT_EQ(w.span(2), (std::pair<std::size_t, std::size_t>{3, 6}));
  EXPECT_EQ(w.span(4), (std::pair<std::size_t, std::size_t>{5, 7}));
  EXPECT_TRUE(w.empty_at(7));
}
