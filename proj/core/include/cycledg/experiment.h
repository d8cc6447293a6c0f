//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_EXPERIMENT_H_
#define CYCLEDG_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycledg/formulation.h"
#include "cycledg/generator.h"
#include "cycledg/instance_io.h"
#include "cycledg/recovery.h"
#include "cycledg/solver.h"

namespace cycledg {
/// Either a file on disk or generator parameters.
struct InstanceSource {
  std::string name;
  std::optional<std::filesystem::path> path;
  std::optional<GeneratorParams> generator;

  static InstanceSource from_file(const std::filesystem::path &path);
  static InstanceSource generated(const GeneratorParams &params);

  Instance load() const;
};

struct ExperimentSpec {
  std::vector<InstanceSource> instances;
  std::vector<FormulationKind> formulations;
  SolverConfig solver;
  RecoveryOptions recovery;
};

enum class RecordStatus { kOk, kSkippedDisconnected, kFailed };

std::string_view record_status_name(RecordStatus status);
std::optional<RecordStatus> parse_record_status(std::string_view name);

struct BenchRecord {
  std::string instance;
  int m = 0;
  int n = 0;
  FormulationKind formulation = FormulationKind::kEdge;
  // NaN unless status is kOk.
  double mde = 0;
  double lde = 0;
  double objective = 0;
  double cpu_seconds = 0;
  int starts_used = 0;
  std::uint64_t seed = 0;
  RecordStatus status = RecordStatus::kOk;
  std::string note;
};

/// Field-wise equality where NaN equals NaN.
bool same_record(const BenchRecord &a, const BenchRecord &b);

struct FormulationRun {
  BenchRecord record;
  std::optional<Realization> realization;
  std::optional<SolveResult> solve;
};

/// Builds and solves one formulation for one instance. The realization comes
/// from the Laplacian recovery for the cycle model and from the x block for
/// the other two. Failures are reported through the record's status.
FormulationRun run_formulation(const Instance &inst, std::string_view name,
                               FormulationKind kind, const SolverConfig &cfg,
                               const RecoveryOptions &recovery = {});

/// One record per (instance, formulation), sorted by instance name and then
/// formulation. An instance that cannot be loaded yields failed records.
std::vector<BenchRecord> run_benchmark(const ExperimentSpec &spec);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural checks on an instance: cycle basis size and flow conservation,
/// block decomposition, Euler machinery (connected graphs only) and, when a
/// realization is stored, the difference round trip.
std::vector<CheckResult> verify_instance(const Instance &inst);
}  // namespace cycledg

#endif  // CYCLEDG_EXPERIMENT_H_
