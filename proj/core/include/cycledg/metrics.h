//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_METRICS_H_
#define CYCLEDG_METRICS_H_

#include <vector>

#include "cycledg/graph.h"
#include "cycledg/instance_io.h"

namespace cycledg {
// Errors are on distances, | ||x_i - x_j|| - d_ij |, not squared distances.

/// Per-edge absolute distance errors.
std::vector<double> distance_errors(const Realization &x,
                                    const WeightedGraph &g);

/// Mean distance error; 0 for an edgeless graph.
double mde(const Realization &x, const WeightedGraph &g);
/// Largest distance error; 0 for an edgeless graph.
double lde(const Realization &x, const WeightedGraph &g);

struct QualityReport {
  double mde = 0;
  double lde = 0;
  double objective = 0;
  std::vector<double> edge_errors;
};

QualityReport quality(const Realization &x, const WeightedGraph &g,
                      double objective);
}  // namespace cycledg

#endif  // CYCLEDG_METRICS_H_
