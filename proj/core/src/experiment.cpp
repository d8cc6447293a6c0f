//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cycledg/decomposition.h"
#include "cycledg/euler.h"
#include "cycledg/metrics.h"

namespace cycledg {
InstanceSource InstanceSource::from_file(const std::filesystem::path &path) {
  return { path.stem().string(), path, std::nullopt };
}

InstanceSource InstanceSource::generated(const GeneratorParams &params) {
  return { generated_name(params), std::nullopt, params };
}

Instance InstanceSource::load() const {
  if (path)
    return read_instance_file(*path);
  if (generator)
    return generate_instance(*generator);
  throw std::invalid_argument("instance source '" + name + "' is empty");
}

std::string_view record_status_name(RecordStatus status) {
  switch (status) {
  case RecordStatus::kOk:
    return "ok";
  case RecordStatus::kSkippedDisconnected:
    return "skipped-disconnected";
  case RecordStatus::kFailed:
    return "failed";
  }
  return "?";
}

std::optional<RecordStatus> parse_record_status(std::string_view name) {
  for (auto s: { RecordStatus::kOk, RecordStatus::kSkippedDisconnected,
                 RecordStatus::kFailed }) {
    if (record_status_name(s) == name)
      return s;
  }
  return std::nullopt;
}

namespace {
  bool same_double(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;  // NOLINT
  }

  void mark_unsolved(BenchRecord &rec, RecordStatus status, std::string note) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    rec.mde = rec.lde = rec.objective = nan;
    rec.status = status;
    rec.note = std::move(note);
  }
}  // namespace

bool same_record(const BenchRecord &a, const BenchRecord &b) {
  return a.instance == b.instance && a.m == b.m && a.n == b.n
         && a.formulation == b.formulation && same_double(a.mde, b.mde)
         && same_double(a.lde, b.lde) && same_double(a.objective, b.objective)
         && same_double(a.cpu_seconds, b.cpu_seconds)
         && a.starts_used == b.starts_used && a.seed == b.seed
         && a.status == b.status && a.note == b.note;
}

FormulationRun run_formulation(const Instance &inst, std::string_view name,
                               FormulationKind kind, const SolverConfig &cfg,
                               const RecoveryOptions &recovery) {
  const WeightedGraph &g = inst.graph;
  FormulationRun run;
  BenchRecord &rec = run.record;
  rec.instance = std::string(name);
  rec.m = g.num_edges();
  rec.n = g.num_vertices();
  rec.formulation = kind;
  rec.seed = cfg.seed;

  if (kind == FormulationKind::kEuler && !is_connected(g)) {
    mark_unsolved(rec, RecordStatus::kSkippedDisconnected,
                  "graph is not connected");
    return run;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const ArcSet arcs = orient(g);
    std::optional<FormulationInstance> f;
    switch (kind) {
    case FormulationKind::kEdge:
      f.emplace(build_edge(g));
      break;
    case FormulationKind::kCycle:
      f.emplace(build_cycle(g, arcs, fundamental_cycle_basis(
                                         g, arcs, spanning_forest(g))));
      break;
    case FormulationKind::kEuler:
      f.emplace(build_euler(g, arcs, build_euler_structure(g, arcs)));
      break;
    }

    SolveResult sol = multistart(*f, cfg);
    Realization x = kind == FormulationKind::kCycle
                        ? recover_realization(g, arcs, sol.best.y_block(),
                                              recovery)
                              .x
                        : sol.best.x_block();
    rec.cpu_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();

    QualityReport q = quality(x, g, sol.best_objective);
    rec.mde = q.mde;
    rec.lde = q.lde;
    rec.objective = q.objective;
    rec.starts_used = static_cast<int>(sol.starts.size());
    rec.status = RecordStatus::kOk;
    run.realization = std::move(x);
    run.solve = std::move(sol);
  } catch (const std::exception &ex) {
    rec.cpu_seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    mark_unsolved(rec, RecordStatus::kFailed, ex.what());
  }
  return run;
}

std::vector<BenchRecord> run_benchmark(const ExperimentSpec &spec) {
  spec.solver.validate();

  std::vector<FormulationKind> kinds = spec.formulations;
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

  std::vector<BenchRecord> records;
  if (kinds.empty())
    return records;

  for (const InstanceSource &src: spec.instances) {
    std::optional<Instance> inst;
    std::string error;
    try {
      inst.emplace(src.load());
    } catch (const std::exception &ex) {
      error = ex.what();
    }

    for (FormulationKind kind: kinds) {
      if (inst) {
        records.push_back(
            run_formulation(*inst, src.name, kind, spec.solver, spec.recovery)
                .record);
      } else {
        BenchRecord rec;
        rec.instance = src.name;
        rec.formulation = kind;
        rec.seed = spec.solver.seed;
        mark_unsolved(rec, RecordStatus::kFailed, error);
        records.push_back(std::move(rec));
      }
    }
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord &a, const BenchRecord &b) {
                     return std::tie(a.instance, a.formulation)
                            < std::tie(b.instance, b.formulation);
                   });
  return records;
}

std::vector<CheckResult> verify_instance(const Instance &inst) {
  const WeightedGraph &g = inst.graph;
  const ArcSet arcs = orient(g);
  const Components comp = connected_components(g);
  std::vector<CheckResult> out;

  {
    CycleBasis basis = fundamental_cycle_basis(g, arcs, spanning_forest(g));
    const int expected = g.num_edges() - g.num_vertices() + comp.count;
    bool ok = static_cast<int>(basis.size()) == expected;
    for (const SignedCycle &c: basis.cycles)
      ok = ok && verify_cycle(g, arcs, c);
    out.push_back({ "cycle-basis", ok,
                    "size " + std::to_string(basis.size()) + ", expected m-n+c = "
                        + std::to_string(expected) });
  }

  {
    BlockDecomposition dec = one_decomposition(g);
    std::vector<int> owner(g.num_edges(), 0);
    bool ok = true;
    for (const Block &b: dec.blocks) {
      for (EdgeId e: b.edges)
        ++owner[e];
    }
    ok = std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; });
    for (std::size_t i = 0; ok && i < dec.blocks.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < dec.blocks.size(); ++j) {
        std::vector<VertexId> common;
        std::set_intersection(dec.blocks[i].vertices.begin(),
                              dec.blocks[i].vertices.end(),
                              dec.blocks[j].vertices.begin(),
                              dec.blocks[j].vertices.end(),
                              std::back_inserter(common));
        ok = common.size() <= 1
             && (common.empty()
                 || std::binary_search(dec.cut_vertices.begin(),
                                       dec.cut_vertices.end(), common[0]));
      }
    }
    out.push_back({ "one-decomposition", ok,
                    std::to_string(dec.blocks.size()) + " blocks, "
                        + std::to_string(dec.cut_vertices.size())
                        + " cut vertices" });
  }

  if (comp.count == 1) {
    CheckResult res { "euler", false, "" };
    try {
      Multiplicity mult = eulerize(g);
      std::vector<CircuitArc> circuit = euler_circuit(g, mult);
      EulerStructure es = two_path_replacement(g, arcs, mult, circuit);
      std::set<std::pair<VertexId, VertexId>> seen;
      bool simple = true;
      for (const Arc &a: es.transformed_circuit)
        simple = simple && seen.emplace(std::min(a.tail, a.head),
                                        std::max(a.tail, a.head))
                               .second;
      res.passed = simple;
      res.detail = "circuit length " + std::to_string(circuit.size())
                   + ", added vertices "
                   + std::to_string(es.added_vertices.size());
    } catch (const std::exception &ex) {
      res.detail = ex.what();
    }
    out.push_back(std::move(res));
  } else {
    out.push_back({ "euler", true,
                    "skipped: " + std::to_string(comp.count)
                        + " components" });
  }

  if (inst.realization) {
    const Realization &x = *inst.realization;
    CheckResult res { "round-trip", false, "" };
    if (x.rows() == g.num_vertices() && x.cols() == g.dim()) {
      RecoveredRealization rec =
          recover_realization(g, arcs, induced_differences(arcs, x));
      double err = mde(rec.x, g);
      res.passed = err <= 1e-7;
      res.detail = "mde " + format_double(err);
    } else {
      res.detail = "realization has the wrong shape";
    }
    out.push_back(std::move(res));
  }
  return out;
}
}  // namespace cycledg
