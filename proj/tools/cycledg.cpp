//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycledg/experiment.h"
#include "cycledg/generator.h"
#include "cycledg/instance_io.h"
#include "cycledg/report.h"

namespace {
using namespace cycledg;

struct SolveOptions {
  std::vector<std::string> instances;
  std::vector<std::string> formulations { "edge", "cycle", "euler" };
  int starts = 20;
  std::uint64_t seed = 1;
  int max_iters = 0;
  double tol = 1e-8;
  int threads = 1;
  std::string recovery = "ls";
  std::string out;
  std::string format = "csv";
};

int run_solve(const SolveOptions &opt) {
  ExperimentSpec spec;
  for (const std::string &p: opt.instances)
    spec.instances.push_back(InstanceSource::from_file(p));
  for (const std::string &f: opt.formulations)
    spec.formulations.push_back(*parse_kind(f));
  spec.solver.starts = opt.starts;
  spec.solver.seed = opt.seed;
  spec.solver.max_iterations = opt.max_iters;
  spec.solver.gradient_tolerance = opt.tol;
  spec.solver.threads = opt.threads;
  spec.recovery.mode = *parse_recovery(opt.recovery);
  const ReportFormat format = *parse_report_format(opt.format);

  std::vector<BenchRecord> records = run_benchmark(spec);
  if (opt.out.empty()) {
    write_report(records, format, std::cout);
  } else {
    write_report_file(records, format, opt.out);
    std::cout << format_table(records);
  }

  int failed = 0;
  for (const BenchRecord &r: records) {
    if (r.status == RecordStatus::kFailed) {
      std::cerr << "cycledg: " << r.instance << " (" << kind_name(r.formulation)
                << ") failed: " << r.note << '\n';
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_generate(const GeneratorParams &params, const std::string &out) {
  Instance inst = generate_instance(params);
  if (out.empty())
    std::cout << write_instance(inst);
  else
    write_instance_file(out, inst);
  return 0;
}

int run_verify(const std::vector<std::string> &paths) {
  bool ok = true;
  for (const std::string &p: paths) {
    std::vector<CheckResult> checks;
    try {
      checks = verify_instance(read_instance_file(p));
    } catch (const std::exception &ex) {
      std::cout << p << ": error: " << ex.what() << '\n';
      ok = false;
      continue;
    }
    for (const CheckResult &c: checks) {
      std::cout << p << ": " << (c.passed ? "PASS " : "FAIL ") << c.name
                << " (" << c.detail << ")\n";
      ok = ok && c.passed;
    }
  }
  return ok ? 0 : 1;
}
}  // namespace

int main(int argc, char **argv) {
  CLI::App app { "Distance geometry solver with cycle-based formulations" };
  app.require_subcommand(1);

  SolveOptions sopt;
  CLI::App *solve = app.add_subcommand(
      "solve", "Run multistart on instances and report MDE, LDE and CPU");
  solve->add_option("--instance", sopt.instances, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--formulation", sopt.formulations, "Formulations to run")
      ->check(CLI::IsMember({ "edge", "cycle", "euler" }))
      ->capture_default_str();
  solve->add_option("--starts", sopt.starts, "Multistart starts per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--seed", sopt.seed, "Random seed")->capture_default_str();
  solve->add_option("--max-iters", sopt.max_iters,
                    "Iterations per start, 0 for 5x variables")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve->add_option("--tol", sopt.tol, "Projected gradient tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--threads", sopt.threads, "Worker threads per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--recovery", sopt.recovery, "Realization recovery")
      ->check(CLI::IsMember({ "ls", "l1" }))
      ->capture_default_str();
  solve->add_option("--out", sopt.out, "Report path (stdout if omitted)");
  solve->add_option("--format", sopt.format, "Report format")
      ->check(CLI::IsMember({ "csv", "json-lines" }))
      ->capture_default_str();

  GeneratorParams gen;
  std::string gen_out;
  CLI::App *generate =
      app.add_subcommand("generate", "Write a random YES instance");
  generate->add_option("--n", gen.n, "Vertices")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  generate->add_option("--K", gen.dim, "Dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--density", gen.density, "Edge probability in (0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "Random seed")
      ->capture_default_str();
  generate->add_option("--out", gen_out, "Output path (stdout if omitted)");

  std::vector<std::string> verify_paths;
  CLI::App *verify = app.add_subcommand(
      "verify", "Check cycle basis, blocks, Euler machinery and round trip");
  verify->add_option("instance", verify_paths, "Instance files")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve)
      return run_solve(sopt);
    if (*generate)
      return run_generate(gen, gen_out);
    if (*verify)
      return run_verify(verify_paths);
  } catch (const std::exception &ex) {
    std::cerr << "cycledg: " << ex.what() << '\n';
    return 1;
  }
  return 1;
}
