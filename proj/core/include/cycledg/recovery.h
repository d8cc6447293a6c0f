//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_RECOVERY_H_
#define CYCLEDG_RECOVERY_H_

#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "cycledg/graph.h"
#include "cycledg/instance_io.h"

namespace cycledg {
enum class RecoveryMode { kLeastSquares, kL1 };

std::string_view recovery_name(RecoveryMode mode);
std::optional<RecoveryMode> parse_recovery(std::string_view name);

struct RecoveryOptions {
  RecoveryMode mode = RecoveryMode::kLeastSquares;
  // IRLS weights 1 / sqrt(r^2 + eps^2).
  double l1_smoothing = 1e-8;
  int l1_iterations = 50;
};

struct RecoveredRealization {
  Realization x;
  int components = 1;
  // More than one component: each is centred independently and their
  // relative placement carries no information.
  bool placement_unidentified() const { return components > 1; }
};

/// Solves x_i - x_j = y_e for every arc (i, j) and dimension, in the least
/// squares or (smoothed) least absolute deviations sense. Each connected
/// component is anchored at the origin.
RecoveredRealization recover_realization(const WeightedGraph &g,
                                         const ArcSet &arcs,
                                         const Eigen::MatrixXd &y,
                                         const RecoveryOptions &opts = {});

struct ResidualSummary {
  double max = 0;
  double mean = 0;
};

/// max and mean of |x_i - x_j - y_e| over all arcs and dimensions.
ResidualSummary residual_check(const WeightedGraph &g, const ArcSet &arcs,
                               const Realization &x, const Eigen::MatrixXd &y);
}  // namespace cycledg

#endif  // CYCLEDG_RECOVERY_H_
