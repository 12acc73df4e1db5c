// Command-line front end: prepare (emit a state-preparation circuit),
// run (optimize a schedule and dump the evaluation trace), verify (named
// self-check suites). Exit codes: 0 success, 1 bad input, 2 resource cap,
// 3 verification failure.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/fullsim.hpp"
#include "gmqaoa/optimizer.hpp"
#include "gmqaoa/problems.hpp"
#include "gmqaoa/stateprep.hpp"
#include "gmqaoa/verify.hpp"

namespace {

using namespace gmqaoa;

// Shortest round-tripping decimal form; keeps outputs byte-stable across
// platforms for a fixed seed.
std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct PrepareArgs {
  std::string problem_path;
  std::string method = "auto";
  std::string out_path;
  int edge_list_k = 1;
};

struct RunArgs {
  std::string problem_path;
  std::size_t p = 1;
  std::string optimizer = "grid+simplex";
  std::size_t resolution = 8;
  std::size_t budget = 10'000;
  std::string engine = "subspace";
  std::string method = "auto";
  std::string out_path;
  int edge_list_k = 1;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int trials = 5;
};

int cmd_prepare(const PrepareArgs& args) {
  const Problem problem = load_problem(args.problem_path, args.edge_list_k);
  const PrepSpec prep = make_prep(problem, args.method);
  const std::string text = circuit_to_string(prep.circuit);
  if (args.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(args.out_path);
  if (!out) throw InputError("cannot open '" + args.out_path + "' for writing");
  out << text;
  std::cout << "qubits=" << prep.circuit.num_qubits
            << " gates=" << prep.circuit.size()
            << " members=" << prep.set.size() << "\n";
  return 0;
}

void write_trace_csv(const std::string& path, const OptimizationReport& rep,
                     std::size_t p) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << "p";
  for (std::size_t r = 1; r <= p; ++r) out << ",gamma" << r;
  for (std::size_t r = 1; r <= p; ++r) out << ",beta" << r;
  out << ",expectation,opt_prob\n";
  for (const TraceEntry& e : rep.trace) {
    out << p;
    for (std::size_t r = 0; r < p; ++r) out << "," << fmt(e.angles.gamma[r]);
    for (std::size_t r = 0; r < p; ++r) out << "," << fmt(e.angles.beta[r]);
    out << "," << fmt(e.expectation) << "," << fmt(e.opt_prob) << "\n";
  }
}

int cmd_run(const RunArgs& args) {
  const Problem problem = load_problem(args.problem_path, args.edge_list_k);
  const Encoding enc = make_encoding(problem);
  const FeasibleSet set = feasible_set(problem);
  const CostTable costs = CostTable::from_function(set, enc.cost);
  const Sense sense = enc.sense;

  OptimizationReport rep;
  if (args.optimizer == "grid") {
    rep = grid_search(set, costs, args.p, args.resolution, sense, args.budget);
  } else if (args.optimizer == "simplex") {
    rep = simplex_refine(set, costs, AngleSchedule::zeros(args.p), sense, 200,
                         1e-6, args.budget);
  } else if (args.optimizer == "grid+simplex") {
    OptimizationReport grid =
        grid_search(set, costs, args.p, args.resolution, sense, args.budget);
    const std::size_t remainder =
        args.budget > grid.evaluations ? args.budget - grid.evaluations : 0;
    if (remainder == 0) {
      rep = std::move(grid);
    } else {
      rep = simplex_refine(set, costs, grid.best_schedule, sense, 200, 1e-6,
                           remainder);
      rep.evaluations += grid.evaluations;
      rep.trace.insert(rep.trace.begin(),
                       std::make_move_iterator(grid.trace.begin()),
                       std::make_move_iterator(grid.trace.end()));
    }
  } else {
    throw InputError("unknown optimizer '" + args.optimizer +
                     "' (expected grid, simplex, or grid+simplex)");
  }

  if (!args.out_path.empty()) write_trace_csv(args.out_path, rep, args.p);

  std::cout << "best=" << fmt(rep.best_expectation)
            << " ratio=" << fmt(rep.approximation_ratio) << " p=" << args.p
            << " evals=" << rep.evaluations << "\n";

  if (args.engine != "subspace") {
    if (args.engine != "full" && args.engine != "both") {
      throw InputError("unknown engine '" + args.engine +
                       "' (expected subspace, full, or both)");
    }
    const PrepSpec prep = make_prep(problem, args.method);
    const FullState full =
        run_circuit_pipeline(prep, enc, rep.best_schedule);
    const std::vector<double> energy = energy_table(enc);
    double full_expectation = 0.0;
    for (std::size_t x = 0; x < full.dim(); ++x) {
      full_expectation += std::norm(full.amp[x]) * energy[x];
    }
    const double leaked = support_check(full, prep.set);
    std::cout << "full_expectation=" << fmt(full_expectation)
              << " off_support=" << fmt(leaked) << "\n";
    if (args.engine == "both") {
      const double dev = cross_check_engines(prep, enc, rep.best_schedule);
      std::cout << "cross_check=" << fmt(dev) << "\n";
      if (!(dev < 1e-8)) {
        std::cerr << "error: engines disagree by " << fmt(dev) << "\n";
        return 3;
      }
    }
  }
  return 0;
}

int cmd_verify(const VerifyArgs& args) {
  std::vector<std::string> names;
  if (args.suite == "all") {
    names = available_suites();
  } else {
    names.push_back(args.suite);
  }
  bool all_passed = true;
  for (const std::string& name : names) {
    const SuiteReport report = run_suite(name, args.seed, args.trials);
    for (const CheckResult& c : report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name
                << " value=" << fmt(c.value)
                << " threshold=" << fmt(c.threshold) << "\n";
    }
    std::cout << "suite " << report.suite << ": "
              << (report.passed() ? "PASS" : "FAIL") << "\n";
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover-mixer QAOA laboratory"};
  app.require_subcommand(1);

  PrepareArgs prepare_args;
  CLI::App* prepare = app.add_subcommand(
      "prepare", "Emit a feasible-superposition preparation circuit");
  prepare->add_option("--problem", prepare_args.problem_path,
                      "Instance file (JSON or edge list)")
      ->required();
  prepare->add_option("--method", prepare_args.method,
                      "auto|dicke|wstate|permutation|alternating|band");
  prepare->add_option("--out", prepare_args.out_path,
                      "Write the circuit here instead of stdout");
  prepare->add_option("--k", prepare_args.edge_list_k,
                      "Cover size for edge-list instances");

  RunArgs run_args;
  CLI::App* run = app.add_subcommand(
      "run", "Optimize a schedule over the feasible subspace");
  run->add_option("--problem", run_args.problem_path,
                  "Instance file (JSON or edge list)")
      ->required();
  run->add_option("--p", run_args.p, "Number of phase/mixer rounds");
  run->add_option("--optimizer", run_args.optimizer,
                  "grid|simplex|grid+simplex");
  run->add_option("--resolution", run_args.resolution,
                  "Grid points per angle");
  run->add_option("--budget", run_args.budget, "Total evaluation budget");
  run->add_option("--engine", run_args.engine,
                  "subspace|full|both (gate-level check of the best schedule)");
  run->add_option("--method", run_args.method,
                  "Preparation method for the gate-level engines");
  run->add_option("--out", run_args.out_path, "Evaluation trace CSV path");
  run->add_option("--k", run_args.edge_list_k,
                  "Cover size for edge-list instances");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Run named self-check suites");
  verify->add_option("--suite", verify_args.suite,
                     "Suite name, or 'all'");
  verify->add_option("--seed", verify_args.seed, "Random-schedule seed");
  verify->add_option("--trials", verify_args.trials,
                     "Random schedules per check");

  try {
    app.parse(argc, argv);
    if (prepare->parsed()) return cmd_prepare(prepare_args);
    if (run->parsed()) return cmd_run(run_args);
    return cmd_verify(verify_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const gmqaoa::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gmqaoa::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
