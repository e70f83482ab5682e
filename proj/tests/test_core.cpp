#include <gtest/gtest.h>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/dp_eval.hpp"
#include "mtlpc/error.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/interval.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/trace.hpp"
#include "oracle.hpp"

using namespace mtlpc;

TEST(BoolVec, ParsesAndPrints) {
  const BoolVec v = BoolVec::from_string("01 10");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_FALSE(v(1));
  EXPECT_TRUE(v(2));
  EXPECT_EQ(v.to_string(), "0110");
  EXPECT_EQ((~v).to_string(), "1001");
  EXPECT_EQ(v.reversed().to_string(), "0110");
  EXPECT_EQ(v.count(), 2u);
  EXPECT_THROW(BoolVec::from_string("012"), ParseError);
}

TEST(BoolVec, Chi) {
  EXPECT_EQ(chi(3, 4, 7).to_string(), "0011000");
  EXPECT_EQ(chi(1, 7, 7).to_string(), "1111111");
  EXPECT_EQ(chi(5, 5, 5).to_string(), "00001");
}

TEST(BoolVec, MonotoneIndexIsABijection) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t r = 0; r < 2 * n; ++r) {
      const MonotoneVec m = MonotoneVec::from_index(n, r);
      EXPECT_TRUE(m.is_canonical());
      EXPECT_EQ(m.index(), r);
      const auto back = to_monotone(m.expand());
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, m);
    }
  }
}

TEST(BoolVec, ToMonotoneAgreesWithShape) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      BoolVec v(n);
      for (std::size_t i = 1; i <= n; ++i) v.set(i, (bits >> (i - 1)) & 1);
      bool down = true;
      bool up = true;
      for (std::size_t i = 1; i < n; ++i) {
        if (!v(i) && v(i + 1)) down = false;
        if (v(i) && !v(i + 1)) up = false;
      }
      const auto m = to_monotone(v);
      ASSERT_EQ(m.has_value(), down || up) << v.to_string();
      if (m) EXPECT_EQ(m->expand(), v);
    }
  }
}

TEST(Interval, RejectsEmptyAndMalformed) {
  EXPECT_THROW(Interval::make(4, 3), std::invalid_argument);
  EXPECT_THROW(Interval::make(3, 3, false, true), std::invalid_argument);
  EXPECT_THROW(Interval::make(3, std::nullopt, true, true), std::invalid_argument);
  EXPECT_NO_THROW(Interval::make(3, 3));
  EXPECT_TRUE(Interval().is_trivial());
  EXPECT_EQ(Interval::make(1, 5, true, false).to_string(), "[1,5)");
  EXPECT_EQ(Interval::at_least(2, false).to_string(), "(2,inf)");
}

TEST(Trace, ExactDecimalDifferences) {
  const Trace t({"0.1", "0.3", "1.25"}, {{"p", BoolVec::from_string("101")}});
  EXPECT_TRUE(t.difference_in(1, 2, Interval::make(0, 0, true, true)) == false);
  // 0.3 - 0.1 is exactly 0.2, which is not in [0,0] but is in (0,1).
  EXPECT_TRUE(t.difference_in(1, 2, Interval::make(0, 1, false, false)));
  EXPECT_FALSE(t.difference_in(1, 3, Interval::make(0, 1, true, true)));
  EXPECT_TRUE(t.difference_in(1, 3, Interval::make(1, 2, true, false)));
  EXPECT_EQ(t.timestamp_string(3), "1.25");
}

TEST(Trace, RejectsBadInput) {
  EXPECT_THROW(Trace({"1", "1"}, {}), std::invalid_argument);
  EXPECT_THROW(Trace({"2", "1"}, {}), std::invalid_argument);
  EXPECT_THROW(Trace({"-1"}, {}), ParseError);
  EXPECT_THROW(Trace({"1", "2"}, {{"p", BoolVec::from_string("1")}}), std::invalid_argument);
  const Trace t = Trace::untimed(2, {});
  EXPECT_THROW(t.prop("nope"), UnknownPropositionError);
}

TEST(Trace, ReversalKeepsDifferences) {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 12);
    const Trace t = random_trace(rng, tp);
    const Trace r = t.reversed();
    const std::size_t n = t.size();
    EXPECT_EQ(r.reversed().propositions(), t.propositions());
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        EXPECT_EQ(t.ticks(j) - t.ticks(i), r.ticks(n + 1 - i) - r.ticks(n + 1 - j));
      }
    }
  }
}

TEST(Parser, Precedence) {
  EXPECT_EQ(parse_formula("p | q & r"),
            Formula::disj(Formula::atom("p"), Formula::conj(Formula::atom("q"), Formula::atom("r"))));
  EXPECT_EQ(parse_formula("p U q U r"),
            Formula::until(Formula::atom("p"), Formula::until(Formula::atom("q"), Formula::atom("r"))));
  EXPECT_EQ(parse_formula("!p U[1,5) q"),
            Formula::until(Formula::negation(Formula::atom("p")), Formula::atom("q"),
                           Interval::make(1, 5, true, false)));
  EXPECT_EQ(parse_formula("F(2,inf) p"),
            Formula::eventually(Formula::atom("p"), Interval::at_least(2, false)));
  EXPECT_EQ(parse_formula("p ^ q | r"),
            Formula::disj(Formula::exclusive(Formula::atom("p"), Formula::atom("q")),
                          Formula::atom("r")));
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse_formula("p & (q | )");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 9u);
  }
  EXPECT_THROW(parse_formula("p U[3,2] q"), ParseError);
  EXPECT_THROW(parse_formula("F[1,inf] p"), ParseError);
  EXPECT_THROW(parse_formula("p q"), ParseError);
  EXPECT_THROW(parse_formula("?"), ParseError);
  EXPECT_THROW(parse_context("p"), ParseError);
  EXPECT_THROW(parse_context("? & ?"), ParseError);
}

TEST(Parser, PrintRoundTripsRandomFormulas) {
  Rng rng(21);
  for (int round = 0; round < 500; ++round) {
    FormulaParams fp;
    fp.fragment = Fragment::MTL_XOR;
    fp.size = uniform(rng, 1, 24);
    const Formula f = random_formula(rng, fp);
    EXPECT_EQ(parse_formula(print_formula(f)), f) << print_formula(f);
  }
}

TEST(Formula, ContextsComposeBySubstitution) {
  const FormulaContext outer = parse_context("chi_4_5 S ?");
  const FormulaContext inner = parse_context("chi_3_4 U ?");
  EXPECT_EQ(compose_contexts(outer, inner).apply(Formula::atom("r")),
            parse_formula("chi_4_5 S (chi_3_4 U r)"));
  EXPECT_EQ(FormulaContext().apply(Formula::atom("r")), Formula::atom("r"));
  EXPECT_THROW(FormulaContext(Formula::atom("p")), std::invalid_argument);
}

TEST(Formula, Fragments) {
  EXPECT_EQ(classify_fragment(parse_formula("G F !p")), Fragment::UTL);
  EXPECT_EQ(classify_fragment(parse_formula("X p ^ H q")), Fragment::UTL);
  EXPECT_EQ(classify_fragment(parse_formula("F[2,inf) p")), Fragment::UTL_GEQ);
  EXPECT_EQ(classify_fragment(parse_formula("p U q")), Fragment::LTL);
  EXPECT_EQ(classify_fragment(parse_formula("p U (q ^ r)")), Fragment::LTL_XOR);
  EXPECT_EQ(classify_fragment(parse_formula("F[1,3] p")), Fragment::MTL);
  EXPECT_EQ(classify_fragment(parse_formula("p ^ (q S[0,2] r)")), Fragment::MTL_XOR);
}

TEST(Formula, GeneratorsStayInTheirFragment) {
  Rng rng(3);
  for (Fragment want : {Fragment::UTL, Fragment::UTL_GEQ, Fragment::LTL, Fragment::LTL_XOR,
                        Fragment::MTL}) {
    for (int round = 0; round < 100; ++round) {
      FormulaParams fp;
      fp.fragment = want;
      fp.size = uniform(rng, 1, 16);
      const Formula f = random_formula(rng, fp);
      EXPECT_LE(f.size(), fp.size);
      const Fragment got = classify_fragment(f);
      if (want == Fragment::UTL) EXPECT_EQ(got, Fragment::UTL);
      if (want == Fragment::UTL_GEQ) EXPECT_TRUE(is_unary_fragment(got));
      if (want == Fragment::LTL) EXPECT_TRUE(got == Fragment::LTL || got == Fragment::UTL);
    }
  }
}

TEST(Generators, DeterministicPerSeed) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(random_trace(a, {}).timestamp_strings(), random_trace(b, {}).timestamp_strings());
  EXPECT_EQ(random_formula(a, {}), random_formula(b, {}));
}

TEST(DpEval, WorkedBlockUpdates) {
  Trace::PropositionMap props;
  props.emplace("r", BoolVec::from_string("0111000"));
  props.emplace("chi_3_4", chi(3, 4, 7));
  props.emplace("chi_4_5", chi(4, 5, 7));
  const Trace t = Trace::untimed(7, props);
  EXPECT_EQ(eval(t, parse_formula("chi_3_4 U r")).to_string(), "0111000");
  EXPECT_EQ(eval(t, parse_formula("chi_4_5 S (chi_3_4 U r)")).to_string(), "0111100");
}

TEST(DpEval, NextIsFalseAtTheEnd) {
  const Trace t = Trace::untimed(3, {{"p", BoolVec::from_string("111")}});
  EXPECT_EQ(eval(t, parse_formula("X p")).to_string(), "110");
  EXPECT_EQ(eval(t, parse_formula("Y p")).to_string(), "011");
  EXPECT_EQ(eval(t, parse_formula("!X !p")).to_string(), "111");
}

TEST(DpEval, TimedUntil) {
  const Trace t({"0", "1.5", "2", "7"},
                {{"p", BoolVec::from_string("1110")}, {"q", BoolVec::from_string("0011")}});
  EXPECT_EQ(eval(t, parse_formula("p U[2,3] q")).to_string(), "1000");
  EXPECT_EQ(eval(t, parse_formula("p U(2,3] q")).to_string(), "0000");
  EXPECT_EQ(eval(t, parse_formula("F[5,inf) q")).to_string(), "1110");
  EXPECT_EQ(eval(t, parse_formula("O[0,0] q")).to_string(), "0011");
}

TEST(DpEval, UnknownPropositionIsAnError) {
  const Trace t = Trace::untimed(2, {});
  EXPECT_THROW(eval(t, parse_formula("p")), UnknownPropositionError);
}

TEST(DpEval, MatchesOracleOnTimedTraces) {
  Rng rng(8);
  for (int round = 0; round < 300; ++round) {
    TraceParams tp;
    tp.length = uniform(rng, 1, 16);
    tp.max_step = 4;
    const Trace trace = random_trace(rng, tp);
    FormulaParams fp;
    fp.fragment = Fragment::MTL_XOR;
    fp.size = uniform(rng, 1, 10);
    fp.max_bound = 4;
    const Formula f = random_formula(rng, fp);
    ASSERT_EQ(oracle::bits(eval(trace, f)), oracle::vector(trace, f)) << print_formula(f);
  }
}
