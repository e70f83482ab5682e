#include "mtlpc/crosscheck.hpp"

#include <filesystem>
#include <sstream>

#include "mtlpc/contraction.hpp"
#include "mtlpc/cvp_reduce.hpp"
#include "mtlpc/dp_eval.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/io.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/utl.hpp"

namespace mtlpc {

namespace {

template <class Run>
std::string run_engine(const char* name, const BoolVec& expected, Run run) {
  try {
    const BoolVec got = run();
    if (got == expected) return {};
    return std::string(name) + " gave " + got.to_string() + ", dp gave " + expected.to_string();
  } catch (const std::exception& e) {
    return std::string(name) + " failed: " + e.what();
  }
}

Formula with_children(const Formula& f, const std::vector<Formula>& kids) {
  if (kids.size() == 1) return Formula::unary(f.op(), kids[0], f.interval());
  return Formula::binary(f.op(), kids[0], kids[1], f.interval());
}

// Every formula obtained by replacing one node of f by one of its children.
std::vector<Formula> shrink_candidates(const Formula& f) {
  std::vector<Formula> out;
  for (std::size_t c = 0; c < f.arity(); ++c) out.push_back(f.child(c));
  for (std::size_t c = 0; c < f.arity(); ++c) {
    for (const Formula& smaller : shrink_candidates(f.child(c))) {
      std::vector<Formula> kids;
      for (std::size_t d = 0; d < f.arity(); ++d) kids.push_back(d == c ? smaller : f.child(d));
      out.push_back(with_children(f, kids));
    }
  }
  return out;
}

}  // namespace

std::string compare_engines(const Trace& trace, const Formula& f, unsigned workers,
                            const std::function<void(TransducerCircuit&)>& fault) {
  BoolVec expected;
  try {
    expected = eval(trace, f);
  } catch (const std::exception& e) {
    return std::string("dp failed: ") + e.what();
  }
  ContractionOptions copt;
  copt.workers = workers;
  copt.mutate = fault;
  std::string problem =
      run_engine("contraction", expected, [&] { return run_mtl(trace, f, copt); });
  if (problem.empty() && is_unary_fragment(classify_fragment(f))) {
    UtlOptions uopt;
    uopt.workers = workers;
    problem = run_engine("utl", expected, [&] { return run_utl(trace, f, uopt); });
  }
  return problem;
}

FormulaCase minimize_case(FormulaCase failing,
                          const std::function<bool(const Trace&, const Formula&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    while (failing.trace.size() > 1) {
      Trace half = failing.trace.prefix(failing.trace.size() / 2);
      if (!fails(half, failing.formula)) break;
      failing.trace = std::move(half);
      progress = true;
    }
    for (const Formula& candidate : shrink_candidates(failing.formula)) {
      if (fails(failing.trace, candidate)) {
        failing.formula = candidate;
        progress = true;
        break;
      }
    }
  }
  return failing;
}

std::string CrosscheckReport::summary() const {
  std::ostringstream out;
  std::size_t formula_bad = 0;
  for (const Mismatch& m : mismatches) formula_bad += m.kind == "formula";
  out << "formula cases: " << formula_cases << ", mismatches: " << formula_bad << "\n";
  out << "circuit cases: " << circuit_cases << ", mismatches: " << mismatches.size() - formula_bad
      << "\n";
  for (std::size_t k = 0; k < mismatches.size(); ++k) {
    const Mismatch& m = mismatches[k];
    out << "mismatch " << k + 1 << " (" << m.kind << "): " << m.description << "\n";
    for (const std::string& file : m.files) out << "  reproducer: " << file << "\n";
  }
  out << (ok() ? "result: ok" : "result: FAILED") << "\n";
  return out.str();
}

CrosscheckReport crosscheck(const CrosscheckOptions& options) {
  CrosscheckReport report;
  Rng rng(options.seed);
  const Fragment fragments[] = {Fragment::MTL, Fragment::MTL_XOR, Fragment::LTL, Fragment::UTL,
                                Fragment::UTL_GEQ};
  auto dump = [&](const std::string& name, const std::string& contents) -> std::string {
    if (options.reproducer_dir.empty()) return {};
    std::filesystem::create_directories(options.reproducer_dir);
    const std::string path = (std::filesystem::path(options.reproducer_dir) / name).string();
    write_file(path, contents);
    return path;
  };

  for (std::size_t k = 0; k < options.formulas; ++k) {
    TraceParams tp;
    tp.length = uniform(rng, 1, std::max<std::size_t>(options.max_length, 1));
    const Trace trace = random_trace(rng, tp);
    FormulaParams fp;
    fp.fragment = fragments[k % std::size(fragments)];
    fp.size = uniform(rng, 1, std::max<std::size_t>(options.max_size, 1));
    const Formula f = random_formula(rng, fp);
    ++report.formula_cases;
    if (compare_engines(trace, f, options.workers, options.fault).empty()) continue;

    const FormulaCase small = minimize_case(FormulaCase{trace, f}, [&](const Trace& t, const Formula& g) {
      return !compare_engines(t, g, options.workers, options.fault).empty();
    });
    Mismatch m;
    m.kind = "formula";
    m.description = print_formula(small.formula) + " on " + std::to_string(small.trace.size()) +
                    " positions: " + compare_engines(small.trace, small.formula, options.workers,
                                                     options.fault);
    const std::string stem = "case" + std::to_string(report.mismatches.size() + 1);
    for (const std::string& path :
         {dump(stem + ".trace.json", trace_to_json(small.trace)),
          dump(stem + ".formula.txt", print_formula(small.formula) + "\n")}) {
      if (!path.empty()) m.files.push_back(path);
    }
    report.mismatches.push_back(std::move(m));
  }

  for (std::size_t k = 0; k < options.circuits; ++k) {
    CircuitParams cp;
    cp.layers = uniform(rng, 2, 8);
    cp.max_width = uniform(rng, 1, 10);
    cp.not_percent = k % 3 == 2 ? 25 : 0;
    const LayeredCircuit c = random_circuit(rng, cp);
    const BoolVec inputs = random_inputs(rng, c.input_gates().size());
    ++report.circuit_cases;
    std::string problem;
    try {
      const bool expected = output_value(c, inputs);
      const Reduction red = reduce(c, inputs, cp.not_percent > 0);
      const bool dp = check(red.trace, red.formula);
      ContractionOptions copt;
      copt.workers = options.workers;
      copt.mutate = options.fault;
      const bool contracted = run_mtl(red.trace, red.formula, copt)(1);
      if (dp != expected || contracted != expected) {
        problem = "circuit " + std::string(expected ? "true" : "false") + ", dp " +
                  (dp ? "true" : "false") + ", contraction " + (contracted ? "true" : "false");
      }
    } catch (const std::exception& e) {
      problem = std::string("reduction failed: ") + e.what();
    }
    if (problem.empty()) continue;
    Mismatch m;
    m.kind = "circuit";
    m.description = problem;
    const std::string path = dump("case" + std::to_string(report.mismatches.size() + 1) +
                                      ".circuit.json",
                                  circuit_to_json(c, inputs));
    if (!path.empty()) m.files.push_back(path);
    report.mismatches.push_back(std::move(m));
  }
  return report;
}

}  // namespace mtlpc
