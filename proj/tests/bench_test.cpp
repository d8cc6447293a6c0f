//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cycledg/experiment.h"
#include "cycledg/generator.h"
#include "cycledg/metrics.h"
#include "cycledg/report.h"
#include "oracles.h"

namespace cycledg {
namespace {
  SolverConfig quick_config() {
    SolverConfig cfg;
    cfg.starts = 5;
    cfg.seed = 3;
    return cfg;
  }

  BenchRecord make_record(std::string inst, FormulationKind k, double mde,
                          double lde, double cpu) {
    BenchRecord r;
    r.instance = std::move(inst);
    r.m = 10;
    r.n = 6;
    r.formulation = k;
    r.mde = mde;
    r.lde = lde;
    r.objective = mde * mde;
    r.cpu_seconds = cpu;
    r.starts_used = 4;
    r.seed = 17;
    return r;
  }

  Instance disconnected_instance() {
    Eigen::MatrixXd x(6, 2);
    x << 0, 0, 1, 0, 0, 1, 5, 5, 6, 5, 5, 6;
    std::vector<Edge> edges;
    for (auto [u, v]: std::vector<std::pair<int, int>> {
             { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 }, { 4, 5 }, { 3, 5 } })
      edges.push_back({ u, v, (x.row(u) - x.row(v)).norm() });
    return { WeightedGraph(6, 2, edges), x };
  }
}  // namespace

TEST(Generator, CompleteGraphAtDensityOne) {
  Instance inst = generate_instance({ 9, 2, 1.0, 4 });
  EXPECT_EQ(inst.graph.num_edges(), 36);
}

TEST(Generator, YesInstanceAndConnected) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorParams p { 15, 3, 0.05, seed };
    Instance inst = generate_instance(p);
    EXPECT_EQ(test::count_components(inst.graph), 1);
    EXPECT_EQ(mde(*inst.realization, inst.graph), 0);
    const double side = std::pow(15.0, 1.0 / 3);
    EXPECT_GE(inst.realization->minCoeff(), 0);
    EXPECT_LE(inst.realization->maxCoeff(), side);
  }
}

TEST(Generator, DeterministicBytes) {
  GeneratorParams p { 20, 3, 0.3, 123 };
  EXPECT_EQ(write_instance(generate_instance(p)),
            write_instance(generate_instance(p)));
  p.seed = 124;
  EXPECT_NE(write_instance(generate_instance(p)),
            write_instance(generate_instance({ 20, 3, 0.3, 123 })));
  EXPECT_EQ(generated_name({ 20, 3, 0.3, 123 }), "gen-n20-K3-p0.3-s123");
}

TEST(Generator, RejectsBadParams) {
  EXPECT_THROW(generate_instance({ 1, 3, 0.5, 1 }), std::invalid_argument);
  EXPECT_THROW(generate_instance({ 5, 0, 0.5, 1 }), std::invalid_argument);
  EXPECT_THROW(generate_instance({ 5, 3, 0.0, 1 }), std::invalid_argument);
  EXPECT_THROW(generate_instance({ 5, 3, 1.5, 1 }), std::invalid_argument);
}

TEST(RunBenchmark, AllFormulationsOnYesInstance) {
  ExperimentSpec spec;
  spec.instances.push_back(InstanceSource::generated({ 10, 3, 0.5, 7 }));
  spec.formulations = { FormulationKind::kEdge, FormulationKind::kCycle,
                        FormulationKind::kEuler };
  spec.solver = quick_config();
  spec.solver.starts = 30;
  std::vector<BenchRecord> recs = run_benchmark(spec);
  ASSERT_EQ(recs.size(), 3U);
  EXPECT_EQ(recs[0].formulation, FormulationKind::kCycle);
  EXPECT_EQ(recs[1].formulation, FormulationKind::kEuler);
  EXPECT_EQ(recs[2].formulation, FormulationKind::kEdge);
  for (const BenchRecord &r: recs) {
    EXPECT_EQ(r.status, RecordStatus::kOk) << r.note;
    EXPECT_EQ(r.n, 10);
    EXPECT_LE(r.mde, r.lde);
    EXPECT_GE(r.cpu_seconds, 0);
    EXPECT_GE(r.starts_used, 1);
    EXPECT_LE(r.starts_used, 30);
    EXPECT_EQ(r.seed, 3U);
  }
  EXPECT_LE(recs[0].mde, 1e-3);
  EXPECT_LE(recs[2].mde, 1e-3);
}

TEST(RunBenchmark, EmptySelection) {
  ExperimentSpec spec;
  spec.instances.push_back(InstanceSource::generated({ 6, 2, 0.5, 1 }));
  EXPECT_TRUE(run_benchmark(spec).empty());
}

TEST(RunBenchmark, DisconnectedSkipsEuler) {
  auto path = std::filesystem::temp_directory_path() / "cycledg_disc.txt";
  write_instance_file(path, disconnected_instance());
  ExperimentSpec spec;
  spec.instances.push_back(InstanceSource::from_file(path));
  spec.formulations = { FormulationKind::kEuler, FormulationKind::kEdge,
                        FormulationKind::kCycle, FormulationKind::kEdge };
  spec.solver = quick_config();
  std::vector<BenchRecord> recs = run_benchmark(spec);
  std::filesystem::remove(path);

  ASSERT_EQ(recs.size(), 3U);
  std::map<FormulationKind, BenchRecord> by;
  for (const BenchRecord &r: recs)
    by[r.formulation] = r;
  EXPECT_EQ(by[FormulationKind::kEuler].status,
            RecordStatus::kSkippedDisconnected);
  EXPECT_TRUE(std::isnan(by[FormulationKind::kEuler].mde));
  EXPECT_EQ(by[FormulationKind::kEdge].status, RecordStatus::kOk);
  EXPECT_EQ(by[FormulationKind::kCycle].status, RecordStatus::kOk);
  EXPECT_EQ(by[FormulationKind::kCycle].instance, "cycledg_disc");
}

TEST(RunBenchmark, MissingFileFailsRecordButContinues) {
  ExperimentSpec spec;
  spec.instances.push_back(InstanceSource::from_file("/nonexistent/a.txt"));
  spec.instances.push_back(InstanceSource::generated({ 6, 2, 0.6, 2 }));
  spec.formulations = { FormulationKind::kEdge };
  spec.solver = quick_config();
  std::vector<BenchRecord> recs = run_benchmark(spec);
  ASSERT_EQ(recs.size(), 2U);
  EXPECT_EQ(recs[0].status, RecordStatus::kFailed);
  EXPECT_FALSE(recs[0].note.empty());
  EXPECT_EQ(recs[1].status, RecordStatus::kOk);
}

TEST(RunBenchmark, Deterministic) {
  ExperimentSpec spec;
  for (std::uint64_t s = 1; s <= 3; ++s)
    spec.instances.push_back(InstanceSource::generated({ 9, 3, 0.5, s }));
  spec.formulations = { FormulationKind::kEdge, FormulationKind::kCycle,
                        FormulationKind::kEuler };
  spec.solver = quick_config();
  auto a = run_benchmark(spec);
  auto b = run_benchmark(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    b[i].cpu_seconds = a[i].cpu_seconds;
    EXPECT_TRUE(same_record(a[i], b[i]));
  }
}

TEST(RunFormulation, CycleZeroObjectiveGivesSmallMde) {
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Instance inst = generate_instance({ 8, 2, 0.6, s });
    FormulationRun run = run_formulation(inst, "x", FormulationKind::kCycle,
                                         quick_config());
    ASSERT_EQ(run.record.status, RecordStatus::kOk);
    ASSERT_TRUE(run.solve);
    if (run.record.objective <= 1e-12)
      EXPECT_LE(run.record.mde, 1e-6);
  }
}

TEST(VerifyInstance, GeneratedPasses) {
  std::vector<CheckResult> checks =
      verify_instance(generate_instance({ 12, 3, 0.4, 5 }));
  ASSERT_EQ(checks.size(), 4U);
  for (const CheckResult &c: checks)
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(VerifyInstance, DisconnectedSkipsEuler) {
  std::vector<CheckResult> checks = verify_instance(disconnected_instance());
  for (const CheckResult &c: checks) {
    EXPECT_TRUE(c.passed) << c.name;
    if (c.name == "euler")
      EXPECT_NE(c.detail.find("skipped"), std::string::npos);
  }
}

TEST(VerifyInstance, WrongRealizationFails) {
  Instance inst = generate_instance({ 8, 2, 0.5, 2 });
  (*inst.realization)(0, 0) += 1;
  bool round_trip_failed = false;
  for (const CheckResult &c: verify_instance(inst))
    round_trip_failed |= c.name == "round-trip" && !c.passed;
  EXPECT_TRUE(round_trip_failed);
}

TEST(Report, HeaderOnlyForNoRecords) {
  std::ostringstream os;
  write_report({}, ReportFormat::kCsv, os);
  EXPECT_EQ(os.str(),
            "instance,m,n,formulation,mde,lde,objective,cpu_seconds,starts,"
            "seed,status,note\n");
}

TEST(Report, CsvRoundTrip) {
  std::vector<BenchRecord> recs {
    make_record("a", FormulationKind::kEdge, 0.1, 0.3, 1.5),
    make_record("b,\"quoted\"", FormulationKind::kCycle, 1.0 / 3, 2.0 / 3,
                0.25),
  };
  BenchRecord skipped = make_record("c", FormulationKind::kEuler, 0, 0, 0.1);
  skipped.mde = skipped.lde = skipped.objective = std::nan("");
  skipped.status = RecordStatus::kSkippedDisconnected;
  skipped.note = "graph is not connected\nsecond line";
  recs.push_back(skipped);

  std::ostringstream os;
  write_report(recs, ReportFormat::kCsv, os);
  std::vector<BenchRecord> back = parse_report_csv(os.str());
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i)
    EXPECT_TRUE(same_record(recs[i], back[i])) << i;
}

TEST(Report, BestCountsSumToInstances) {
  std::vector<BenchRecord> recs;
  // Instance i2 ties on mde.
  recs.push_back(make_record("i1", FormulationKind::kEdge, 0.1, 0.5, 1));
  recs.push_back(make_record("i1", FormulationKind::kCycle, 0.2, 0.4, 2));
  recs.push_back(make_record("i2", FormulationKind::kEdge, 0.3, 0.9, 3));
  recs.push_back(make_record("i2", FormulationKind::kCycle, 0.3, 0.8, 1));
  recs.push_back(make_record("i3", FormulationKind::kEdge, 0.5, 0.6, 4));
  recs.push_back(make_record("i3", FormulationKind::kCycle, 0.4, 0.7, 5));

  std::map<FormulationKind, SummaryRow> best, avg, sd;
  for (const SummaryRow &s: summarize(recs)) {
    if (s.label == "|best|")
      best[s.formulation] = s;
    else if (s.label == "avg")
      avg[s.formulation] = s;
    else if (s.label == "stdev")
      sd[s.formulation] = s;
  }
  // Recount by hand: mde edge wins i1, tie i2, cycle wins i3.
  EXPECT_EQ(best[FormulationKind::kEdge].mde, 2);
  EXPECT_EQ(best[FormulationKind::kCycle].mde, 2);
  EXPECT_EQ(best[FormulationKind::kEdge].lde, 1);
  EXPECT_EQ(best[FormulationKind::kCycle].lde, 2);
  EXPECT_EQ(best[FormulationKind::kEdge].cpu, 2);
  EXPECT_EQ(best[FormulationKind::kCycle].cpu, 1);
  EXPECT_EQ(best[FormulationKind::kEdge].lde + best[FormulationKind::kCycle].lde,
            3);
  EXPECT_NEAR(avg[FormulationKind::kEdge].mde, 0.3, 1e-15);
  EXPECT_NEAR(sd[FormulationKind::kEdge].mde, 0.2, 1e-15);
  EXPECT_NEAR(avg[FormulationKind::kCycle].cpu, 8.0 / 3, 1e-15);
}

TEST(Report, SummaryIgnoresFailedRecords) {
  std::vector<BenchRecord> recs;
  recs.push_back(make_record("i1", FormulationKind::kEdge, 0.1, 0.5, 1));
  BenchRecord bad = make_record("i2", FormulationKind::kEdge, 0, 0, 9);
  bad.status = RecordStatus::kFailed;
  bad.mde = std::nan("");
  recs.push_back(bad);
  for (const SummaryRow &s: summarize(recs)) {
    if (s.label == "avg") {
      EXPECT_DOUBLE_EQ(s.mde, 0.1);
      EXPECT_DOUBLE_EQ(s.cpu, 1);
    }
  }
}

TEST(Report, JsonLines) {
  std::vector<BenchRecord> recs {
    make_record("a", FormulationKind::kEdge, 0.1, 0.3, 1.5),
  };
  BenchRecord skipped = make_record("a", FormulationKind::kEuler, 0, 0, 0);
  skipped.mde = std::nan("");
  skipped.status = RecordStatus::kSkippedDisconnected;
  recs.push_back(skipped);

  std::ostringstream os;
  write_report(recs, ReportFormat::kJsonLines, os);
  std::istringstream in(os.str());
  std::string line;
  int records = 0, summaries = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    if (j["type"] == "record") {
      ++records;
      if (j["formulation"] == "euler") {
        EXPECT_TRUE(j["mde"].is_null());
        EXPECT_EQ(j["status"], "skipped-disconnected");
      } else {
        EXPECT_EQ(j["mde"].get<double>(), 0.1);
      }
    } else {
      EXPECT_EQ(j["type"], "summary");
      ++summaries;
    }
  }
  EXPECT_EQ(records, 2);
  EXPECT_EQ(summaries, 6);
}

TEST(Report, UnwritablePath) {
  EXPECT_THROW(write_report_file({}, ReportFormat::kCsv,
                                 "/nonexistent-dir/out.csv"),
               std::runtime_error);
  EXPECT_FALSE(parse_report_format("xml"));
  EXPECT_EQ(parse_report_format("json-lines"), ReportFormat::kJsonLines);
}

TEST(Report, Table) {
  std::vector<BenchRecord> recs {
    make_record("i1", FormulationKind::kEdge, 0.1, 0.5, 1),
    make_record("i1", FormulationKind::kCycle, 0.2, 0.4, 2),
  };
  std::string t = format_table(recs);
  EXPECT_NE(t.find("MDE cycle"), std::string::npos);
  EXPECT_NE(t.find("|best|"), std::string::npos);
  EXPECT_NE(t.find("i1"), std::string::npos);
}
}  // namespace cycledg
