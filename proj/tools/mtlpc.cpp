// Command-line front end: check, reduce, eval-circuit, gen, crosscheck,
// bench and selftest.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtlpc/contraction.hpp"
#include "mtlpc/crosscheck.hpp"
#include "mtlpc/cvp_reduce.hpp"
#include "mtlpc/dp_eval.hpp"
#include "mtlpc/error.hpp"
#include "mtlpc/generators.hpp"
#include "mtlpc/io.hpp"
#include "mtlpc/parser.hpp"
#include "mtlpc/transducers.hpp"
#include "mtlpc/utl.hpp"

using namespace mtlpc;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;
constexpr int kFragmentError = 3;
constexpr int kInternalError = 4;

struct Global {
  std::string engine = "auto";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  std::string format = "verdict";
  bool verify = false;
  bool allow_xor = false;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Fragment fragment_from_string(const std::string& s) {
  for (Fragment f : {Fragment::UTL, Fragment::UTL_GEQ, Fragment::LTL, Fragment::LTL_XOR,
                     Fragment::MTL, Fragment::MTL_XOR}) {
    std::string name = to_string(f);
    for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == s) return f;
  }
  throw Error("unknown fragment '" + s + "'");
}

std::string resolve_engine(const std::string& engine, const Formula& f) {
  if (engine != "auto") return engine;
  return is_unary_fragment(classify_fragment(f)) ? "utl" : "contraction";
}

BoolVec run_engine(const std::string& engine, const Trace& trace, const Formula& f,
                   unsigned workers) {
  if (engine == "dp") return eval(trace, f);
  if (engine == "utl") {
    UtlOptions o;
    o.workers = workers;
    return run_utl(trace, f, o);
  }
  ContractionOptions o;
  o.workers = workers;
  return run_mtl(trace, f, o);
}

// --- check ---------------------------------------------------------------

struct CheckArgs {
  std::string trace;
  std::string formula;
  std::string formula_file;
};

int cmd_check(const Global& g, const CheckArgs& a) {
  if (a.formula.empty() == a.formula_file.empty()) {
    throw Error("give exactly one of --formula and --formula-file");
  }
  const Trace trace = parse_trace_json(read_file(a.trace));
  const Formula f = parse_formula(a.formula.empty() ? read_file(a.formula_file) : a.formula);
  const std::string engine = resolve_engine(g.engine, f);
  const BoolVec v = run_engine(engine, trace, f, g.workers);
  const bool sat = v(1);
  if (g.format == "vector") {
    std::cout << v.to_string() << "\n";
  } else if (g.format == "json") {
    json doc;
    doc["engine"] = engine;
    doc["fragment"] = to_string(classify_fragment(f));
    doc["satisfied"] = sat;
    doc["vector"] = v.to_string();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << (sat ? "true" : "false") << "\n";
  }
  return sat ? 0 : 1;
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
  std::string circuit;
  std::string inputs;
  std::string out_formula;
  std::string out_trace;
  std::string provenance;
};

int cmd_reduce(const Global& g, const ReduceArgs& a) {
  const CircuitFile file = parse_circuit_json(read_file(a.circuit));
  const std::size_t count = file.circuit.input_gates().size();
  BoolVec inputs = file.inputs.value_or(BoolVec(count));
  if (!a.inputs.empty()) inputs = BoolVec::from_string(a.inputs);
  const Reduction red = reduce(file.circuit, inputs, g.allow_xor);

  json prov;
  prov["length"] = red.blocks.length;
  prov["wires"] = red.circuit.wire_count();
  prov["gates"] = red.circuit.gate_count();
  prov["propositions"] = red.trace.propositions().size();
  prov["inputs"] = inputs.to_string();
  json blocks = json::array();
  for (std::size_t l = 0; l < red.circuit.layers.size(); ++l) {
    for (std::size_t j = 0; j < red.circuit.layers[l].size(); ++j) {
      const Block& b = red.blocks.blocks[l][j];
      blocks.push_back({{"layer", l},
                        {"index", red.kept[l][j]},
                        {"type", to_string(red.circuit.layers[l][j].type)},
                        {"k", red.blocks.k[l][j]},
                        {"block", {b.lo, b.hi}}});
    }
  }
  prov["blocks"] = blocks;

  int status = 0;
  if (g.verify) {
    const bool expected = output_value(file.circuit, inputs);
    const bool dp = check(red.trace, red.formula);
    ContractionOptions o;
    o.workers = g.workers;
    const bool contracted = run_mtl(red.trace, red.formula, o)(1);
    prov["verified"] = {{"circuit", expected}, {"dp", dp}, {"contraction", contracted}};
    if (dp != expected || contracted != expected) status = 1;
  }

  if (!a.out_formula.empty()) write_file(a.out_formula, print_formula(red.formula) + "\n");
  if (!a.out_trace.empty()) write_file(a.out_trace, trace_to_json(red.trace));
  if (!a.provenance.empty()) write_file(a.provenance, prov.dump(2) + "\n");

  if (g.format == "json") {
    std::cout << prov.dump(2) << "\n";
  } else {
    std::cout << "trace length " << red.blocks.length << " (wires " << red.circuit.wire_count()
              << "), propositions " << red.trace.propositions().size() << ", formula size "
              << red.formula.size() << "\n";
    if (a.out_formula.empty()) std::cout << print_formula(red.formula) << "\n";
    if (g.verify) std::cout << (status == 0 ? "verified" : "verification FAILED") << "\n";
  }
  return status;
}

// --- eval-circuit ----------------------------------------------------------

struct EvalArgs {
  std::string circuit;
  std::string inputs;
};

int cmd_eval_circuit(const Global& g, const EvalArgs& a) {
  const CircuitFile file = parse_circuit_json(read_file(a.circuit));
  const std::size_t count = file.circuit.input_gates().size();
  BoolVec inputs = file.inputs.value_or(BoolVec(count));
  if (!a.inputs.empty()) inputs = BoolVec::from_string(a.inputs);
  const ValidationReport report = validate(file.circuit);
  const CircuitValues values = evaluate(file.circuit, inputs);
  const bool out = values.back().at(file.circuit.output) != 0;
  if (g.format == "json") {
    json doc;
    doc["output"] = out;
    doc["upward_layered"] = report.upward_layered();
    doc["upward_stratified"] = report.upward_stratified();
    doc["monotone"] = report.monotone;
    doc["violations"] = report.violations;
    json layers = json::array();
    for (const auto& layer : values) {
      std::string bits;
      for (char v : layer) bits += v ? '1' : '0';
      layers.push_back(bits);
    }
    doc["values"] = layers;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const std::string& v : report.violations) std::cerr << "warning: " << v << "\n";
    std::cout << (out ? "true" : "false") << "\n";
  }
  return 0;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t length = 16;
  std::string props = "p,q,r";
  unsigned density = 50;
  unsigned max_step = 3;
  std::string fragment = "mtl";
  std::size_t size = 8;
  unsigned max_bound = 6;
  std::size_t layers = 4;
  std::size_t width = 5;
  unsigned not_percent = 0;
  unsigned const_percent = 5;
  std::string out;
};

int cmd_gen(const Global& g, const GenArgs& a) {
  Rng rng(g.seed);
  std::string text;
  if (a.kind == "trace") {
    TraceParams p;
    p.length = a.length;
    p.propositions = split(a.props);
    p.density = a.density;
    p.max_step = a.max_step;
    text = trace_to_json(random_trace(rng, p));
  } else if (a.kind == "formula") {
    FormulaParams p;
    p.fragment = fragment_from_string(a.fragment);
    p.size = a.size;
    p.atoms = split(a.props);
    p.max_bound = a.max_bound;
    text = print_formula(random_formula(rng, p)) + "\n";
  } else {
    CircuitParams p;
    p.layers = a.layers;
    p.max_width = a.width;
    p.not_percent = a.not_percent;
    p.const_percent = a.const_percent;
    const LayeredCircuit c = random_circuit(rng, p);
    text = circuit_to_json(c, random_inputs(rng, c.input_gates().size()));
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return 0;
}

// --- crosscheck --------------------------------------------------------------

struct CrossArgs {
  std::size_t count = 1000;
  std::size_t circuits = 200;
  std::size_t max_length = 32;
  std::size_t max_size = 16;
  std::string out_dir = "crosscheck-failures";
  bool inject_fault = false;
};

// Turns the first OR gate of every built transducer into an AND gate.
void flip_first_or(TransducerCircuit& t) {
  for (Layer& layer : t.circuit.layers) {
    for (Gate& gate : layer) {
      if (gate.type == GateType::Or) {
        gate.type = GateType::And;
        return;
      }
    }
  }
}

int cmd_crosscheck(const Global& g, const CrossArgs& a) {
  CrosscheckOptions o;
  o.formulas = a.count;
  o.circuits = a.circuits;
  o.seed = g.seed;
  o.workers = g.workers;
  o.max_length = a.max_length;
  o.max_size = a.max_size;
  o.reproducer_dir = a.out_dir;
  if (a.inject_fault) o.fault = flip_first_or;
  const CrosscheckReport report = crosscheck(o);
  std::cout << "crosscheck seed " << g.seed << "\n" << report.summary();
  return report.ok() ? 0 : 1;
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
  std::string sizes = "64,256,1024";
  std::string workers = "1,8";
  std::string engines = "dp,contraction,utl";
  std::string formula = "(p U[1,5] q) | G r";
  std::string unary_formula = "G F p & H (q | X r)";
};

int cmd_bench(const Global& g, const BenchArgs& a) {
  std::cout << "engine,size,workers,millis,satisfied\n";
  const Formula mtl = parse_formula(a.formula);
  const Formula utl = parse_formula(a.unary_formula);
  for (const std::string& size_text : split(a.sizes)) {
    Rng rng(g.seed);
    TraceParams tp;
    tp.length = std::stoul(size_text);
    const Trace trace = random_trace(rng, tp);
    for (const std::string& engine : split(a.engines)) {
      const Formula& f = engine == "utl" ? utl : mtl;
      const std::vector<std::string> worker_list =
          engine == "dp" ? std::vector<std::string>{"1"} : split(a.workers);
      for (const std::string& w : worker_list) {
        const auto start = std::chrono::steady_clock::now();
        const BoolVec v = run_engine(engine, trace, f, static_cast<unsigned>(std::stoul(w)));
        const auto ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << engine << "," << trace.size() << "," << w << "," << ms << ","
                  << (v(1) ? 1 : 0) << "\n";
      }
    }
  }
  return 0;
}

// --- selftest ------------------------------------------------------------------

int cmd_selftest() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    failures += ok ? 0 : 1;
  };

  {
    Trace::PropositionMap props;
    props.emplace("r", BoolVec::from_string("0111000"));
    props.emplace(chi_name(3, 4), chi(3, 4, 7));
    props.emplace(chi_name(4, 5), chi(4, 5, 7));
    const Trace t = Trace::untimed(7, props);
    report("block update by until",
           eval(t, parse_formula("chi_3_4 U r")) == BoolVec::from_string("0111000"));
    report("block update by since", eval(t, parse_formula("chi_4_5 S (chi_3_4 U r)")) ==
                                        BoolVec::from_string("0111100"));
  }
  {
    LayeredCircuit c = parse_circuit_json(
                           R"({"layers": [[{"type":"input"},{"type":"input"},{"type":"input"}],
                 [{"type":"or","preds":[0,1]},{"type":"or","preds":[1,2]},{"type":"or","preds":[2]}],
                 [{"type":"or","preds":[0,1,2]}]], "output": 0})")
                           .circuit;
    const BlockPartition b = compute_blocks(c);
    report("reduction blocks", b.length == 7 && b.blocks[1][1] == (Block{3, 5}) &&
                                   b.blocks[0][1] == (Block{2, 4}) && compute_k(c, {1, 1}) == 4);
    const BoolVec in = BoolVec::from_string("010");
    const Reduction red = reduce(c, in);
    report("reduction round trip", check(red.trace, red.formula) == output_value(c, in));
  }
  {
    const Trace t({"1", "2", "3", "4", "5", "6", "8.5"}, {});
    const BoolVec s = BoolVec::from_string("0111110");
    const Interval iv = Interval::make(1, 5);
    const TransducerCircuit left = build_until_left(s, iv, t);
    bool ok = validate_transducer(left).ok();
    for (unsigned bits = 0; bits < 128 && ok; ++bits) {
      BoolVec x(7);
      for (std::size_t i = 1; i <= 7; ++i) x.set(i, (bits >> (i - 1)) & 1);
      const Trace tx = t.with_proposition("x", x).with_proposition("s", s);
      ok = apply_transducer(left, x) == eval(tx, parse_formula("s U[1,5] x"));
    }
    report("until circuit with constant left operand", ok);
  }
  {
    Rng rng(1);
    bool ok = true;
    for (int k = 0; k < 50 && ok; ++k) {
      const Trace t = random_trace(rng, TraceParams{});
      FormulaParams fp;
      fp.size = 10;
      ok = compare_engines(t, random_formula(rng, fp)).empty();
    }
    report("engines agree on random formulas", ok);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path checking for metric temporal logic over finite timed traces"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--engine", g.engine, "dp, contraction, utl or auto")
      ->check(CLI::IsMember({"dp", "contraction", "utl", "auto"}));
  app.add_option("--workers", g.workers, "Threads for the contraction engines")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for generators");
  app.add_option("--format", g.format, "verdict, vector or json")
      ->check(CLI::IsMember({"verdict", "vector", "json"}));
  app.add_flag("--verify", g.verify, "Re-check reductions with every engine");
  app.add_flag("--xor", g.allow_xor, "Allow NOT gates (reduces to LTL with xor)");

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a trace satisfies a formula");
  check_cmd->add_option("--trace", ca.trace, "Trace JSON file")->required();
  check_cmd->add_option("--formula", ca.formula, "Formula text");
  check_cmd->add_option("--formula-file", ca.formula_file, "File holding the formula");

  ReduceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a layered circuit to path checking");
  reduce_cmd->add_option("--circuit", ra.circuit, "Circuit JSON file")->required();
  reduce_cmd->add_option("--inputs", ra.inputs, "Input bits, overriding the file");
  reduce_cmd->add_option("--out-formula", ra.out_formula, "Write the formula here");
  reduce_cmd->add_option("--out-trace", ra.out_trace, "Write the trace JSON here");
  reduce_cmd->add_option("--provenance", ra.provenance, "Write the gate-to-block map here");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval-circuit", "Evaluate a layered circuit");
  eval_cmd->add_option("--circuit", ea.circuit, "Circuit JSON file")->required();
  eval_cmd->add_option("--inputs", ea.inputs, "Input bits, overriding the file");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random trace, formula or circuit");
  gen_cmd->add_option("kind", ga.kind, "trace, formula or circuit")
      ->required()
      ->check(CLI::IsMember({"trace", "formula", "circuit"}));
  gen_cmd->add_option("--length", ga.length, "Trace length");
  gen_cmd->add_option("--props", ga.props, "Comma-separated proposition names");
  gen_cmd->add_option("--density", ga.density, "Percent of true proposition values");
  gen_cmd->add_option("--max-step", ga.max_step, "Largest timestamp step (0: t_i = i)");
  gen_cmd->add_option("--fragment", ga.fragment, "utl, utl_geq, ltl, ltl_xor, mtl, mtl_xor");
  gen_cmd->add_option("--size", ga.size, "Formula node bound");
  gen_cmd->add_option("--max-bound", ga.max_bound, "Largest interval endpoint");
  gen_cmd->add_option("--layers", ga.layers, "Circuit layers including inputs");
  gen_cmd->add_option("--width", ga.width, "Gates per layer");
  gen_cmd->add_option("--not-percent", ga.not_percent, "Chance of NOT gates");
  gen_cmd->add_option("--const-percent", ga.const_percent, "Chance of constant gates");
  gen_cmd->add_option("--out", ga.out, "Output file (default stdout)");

  CrossArgs xa;
  auto* cross_cmd = app.add_subcommand("crosscheck", "Differential test of all engines");
  cross_cmd->add_option("--count", xa.count, "Random formula cases");
  cross_cmd->add_option("--circuits", xa.circuits, "Random circuit cases");
  cross_cmd->add_option("--max-length", xa.max_length, "Longest trace");
  cross_cmd->add_option("--max-size", xa.max_size, "Largest formula");
  cross_cmd->add_option("--out-dir", xa.out_dir, "Directory for reproducers");
  cross_cmd->add_flag("--inject-fault", xa.inject_fault, "Break one gate rule (harness check)");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Time the engines; prints CSV");
  bench_cmd->add_option("--sizes", ba.sizes, "Comma-separated trace lengths")->expected(0, 1);
  bench_cmd->add_option("--worker-counts", ba.workers, "Comma-separated worker counts");
  bench_cmd->add_option("--engines", ba.engines, "Comma-separated engines");
  bench_cmd->add_option("--formula", ba.formula, "Formula for dp and contraction");
  bench_cmd->add_option("--unary-formula", ba.unary_formula, "Formula for the utl engine");

  auto* self_cmd = app.add_subcommand("selftest", "Run built-in worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(g, ca);
    if (*reduce_cmd) return cmd_reduce(g, ra);
    if (*eval_cmd) return cmd_eval_circuit(g, ea);
    if (*gen_cmd) return cmd_gen(g, ga);
    if (*cross_cmd) return cmd_crosscheck(g, xa);
    if (*bench_cmd) return cmd_bench(g, ba);
    if (*self_cmd) return cmd_selftest();
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFragmentError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
