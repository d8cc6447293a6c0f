//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/recovery.h"

#include <random>

#include <gtest/gtest.h>

#include "cycledg/formulation.h"
#include "cycledg/generator.h"
#include "cycledg/metrics.h"
#include "oracles.h"

namespace cycledg {
namespace {
  using test::make_graph;

  WeightedGraph unit_square() {
    return make_graph(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 0, 3 } });
  }

  Eigen::MatrixXd square_x() {
    Eigen::MatrixXd x(4, 2);
    x << 0, 0, 1, 0, 1, 1, 0, 1;
    return x;
  }

  Eigen::MatrixXd centered(Eigen::MatrixXd x) {
    x.rowwise() -= x.colwise().mean();
    return x;
  }

  double sse(const WeightedGraph &g, const ArcSet &arcs,
             const Eigen::MatrixXd &x, const Eigen::MatrixXd &y) {
    double s = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (Eigen::Index k = 0; k < y.cols(); ++k) {
        double r = x(arcs[e].tail, k) - x(arcs[e].head, k) - y(e, k);
        s += r * r;
      }
    }
    return s;
  }
}  // namespace

TEST(RecoveryMode, Names) {
  EXPECT_EQ(parse_recovery("ls"), RecoveryMode::kLeastSquares);
  EXPECT_EQ(parse_recovery("l1"), RecoveryMode::kL1);
  EXPECT_EQ(recovery_name(RecoveryMode::kL1), "l1");
  EXPECT_FALSE(parse_recovery("lp"));
}

TEST(RecoverRealization, UnitSquareUpToTranslation) {
  WeightedGraph g = unit_square();
  ArcSet arcs = orient(g);
  Eigen::MatrixXd y = induced_differences(arcs, square_x());
  for (RecoveryMode mode: { RecoveryMode::kLeastSquares, RecoveryMode::kL1 }) {
    RecoveredRealization r = recover_realization(g, arcs, y, { mode });
    EXPECT_LE((r.x - centered(square_x())).lpNorm<Eigen::Infinity>(), 1e-10);
    EXPECT_LE(residual_check(g, arcs, r.x, y).max, 1e-10);
    EXPECT_FALSE(r.placement_unidentified());
  }
}

TEST(RecoverRealization, TreeIsExactForAnyY) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss;
  WeightedGraph g = make_graph(
      6, { { 0, 1 }, { 1, 2 }, { 1, 3 }, { 3, 4 }, { 0, 5 } }, {}, 3);
  ArcSet arcs = orient(g);
  Eigen::MatrixXd y(5, 3);
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y.data()[i] = gauss(rng);
  RecoveredRealization r = recover_realization(g, arcs, y);
  EXPECT_LE(residual_check(g, arcs, r.x, y).max, 1e-12);

  // Back-substitution from vertex 0 gives the same shape.
  Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(6, 3);
  ref.row(1) = ref.row(0) - y.row(0);
  ref.row(2) = ref.row(1) - y.row(1);
  ref.row(3) = ref.row(1) - y.row(2);
  ref.row(4) = ref.row(3) - y.row(3);
  ref.row(5) = ref.row(0) - y.row(4);
  EXPECT_LE((r.x - centered(ref)).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(RecoverRealization, ZeroInZeroOut) {
  WeightedGraph g = unit_square();
  RecoveredRealization r =
      recover_realization(g, orient(g), Eigen::MatrixXd::Zero(4, 2));
  EXPECT_EQ(r.x, Eigen::MatrixXd::Zero(4, 2));
}

TEST(RecoverRealization, DisconnectedComponentsCentredSeparately) {
  WeightedGraph g = make_graph(
      6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 }, { 4, 5 }, { 3, 5 } });
  ArcSet arcs = orient(g);
  Eigen::MatrixXd x(6, 2);
  x << 0, 0, 1, 0, 0, 1, 10, 10, 11, 10, 10, 12;
  RecoveredRealization r =
      recover_realization(g, arcs, induced_differences(arcs, x));
  EXPECT_EQ(r.components, 2);
  EXPECT_TRUE(r.placement_unidentified());
  EXPECT_LE(r.x.topRows(3).colwise().sum().norm(), 1e-12);
  EXPECT_LE(r.x.bottomRows(3).colwise().sum().norm(), 1e-12);
  EXPECT_LE(mde(r.x, make_graph(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 },
                                     { 4, 5 }, { 3, 5 } },
                                { 1, std::sqrt(2.0), 1, 1, std::sqrt(5.0), 2 })),
            1e-12);
}

TEST(RecoverRealization, RejectsBadShape) {
  WeightedGraph g = unit_square();
  EXPECT_THROW(recover_realization(g, orient(g), Eigen::MatrixXd::Zero(3, 2)),
               std::invalid_argument);
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(4, 2);
  y(0, 0) = std::nan("");
  EXPECT_THROW(recover_realization(g, orient(g), y), std::invalid_argument);
}

TEST(RecoverRealization, RoundTripOnGeneratedInstances) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = generate_instance({ 5 + trial % 16, 2 + trial % 2,
                                        0.3, rng() });
    const WeightedGraph &g = inst.graph;
    ArcSet arcs = orient(g);
    RecoveredRealization r =
        recover_realization(g, arcs, induced_differences(arcs, *inst.realization));
    EXPECT_LE(mde(r.x, g), 1e-7);
    EXPECT_LE((r.x - centered(*inst.realization)).lpNorm<Eigen::Infinity>(),
              1e-9);
  }
}

TEST(RecoverRealization, TranslationInvariant) {
  Instance inst = generate_instance({ 12, 3, 0.4, 8 });
  const WeightedGraph &g = inst.graph;
  ArcSet arcs = orient(g);
  Eigen::MatrixXd x = *inst.realization;
  Eigen::MatrixXd shifted = x.rowwise() + Eigen::RowVector3d(5, -2, 7);
  RecoveredRealization a =
      recover_realization(g, arcs, induced_differences(arcs, x));
  RecoveredRealization b =
      recover_realization(g, arcs, induced_differences(arcs, shifted));
  EXPECT_LE((a.x - b.x).lpNorm<Eigen::Infinity>(), 1e-10);
}

TEST(RecoverRealization, LeastSquaresIsStationary) {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    WeightedGraph g = test::random_graph(rng, 10, 0.4, true, 2);
    ArcSet arcs = orient(g);
    Eigen::MatrixXd y(g.num_edges(), 2);
    for (Eigen::Index i = 0; i < y.size(); ++i)
      y.data()[i] = gauss(rng);
    RecoveredRealization r = recover_realization(g, arcs, y);
    const double base = sse(g, arcs, r.x, y);
    for (int dir = 0; dir < 10; ++dir) {
      Eigen::MatrixXd d(g.num_vertices(), 2);
      for (Eigen::Index i = 0; i < d.size(); ++i)
        d.data()[i] = gauss(rng);
      for (double t: { 1e-3, -1e-3, 0.1 })
        EXPECT_GE(sse(g, arcs, r.x + t * d, y), base - 1e-8);
    }
  }
}

TEST(RecoverRealization, L1IsNoWorseInAbsoluteResidual) {
  std::mt19937_64 rng(20);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    Instance inst = generate_instance({ 10, 2, 0.5, rng() });
    const WeightedGraph &g = inst.graph;
    ArcSet arcs = orient(g);
    Eigen::MatrixXd y = induced_differences(arcs, *inst.realization);
    // One gross outlier on a single edge.
    y(trial % g.num_edges(), 0) += 5;
    RecoveredRealization ls = recover_realization(g, arcs, y);
    RecoveredRealization l1 =
        recover_realization(g, arcs, y, { RecoveryMode::kL1 });
    EXPECT_LE(residual_check(g, arcs, l1.x, y).mean,
              residual_check(g, arcs, ls.x, y).mean + 1e-9);
  }
}

TEST(ResidualCheck, Cases) {
  WeightedGraph g = unit_square();
  ArcSet arcs = orient(g);
  ResidualSummary zero =
      residual_check(g, arcs, Eigen::MatrixXd::Zero(4, 2),
                     Eigen::MatrixXd::Zero(4, 2));
  EXPECT_EQ(zero.max, 0);
  EXPECT_EQ(zero.mean, 0);

  // Violate the single C4 cycle by 0.4 in one coordinate.
  Eigen::MatrixXd y = induced_differences(arcs, square_x());
  y(0, 0) += 0.4;
  RecoveredRealization r = recover_realization(g, arcs, y);
  ResidualSummary s = residual_check(g, arcs, r.x, y);
  EXPECT_GE(s.max, 0.4 / 4 - 1e-12);
  EXPECT_NEAR(s.max, 0.1, 1e-12);

  EXPECT_THROW(residual_check(g, arcs, Eigen::MatrixXd::Zero(3, 2), y),
               std::invalid_argument);
}
}  // namespace cycledg
