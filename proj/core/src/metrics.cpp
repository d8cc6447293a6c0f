//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/metrics.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cycledg {
std::vector<double> distance_errors(const Realization &x,
                                    const WeightedGraph &g) {
  if (x.rows() != g.num_vertices() || x.cols() != g.dim())
    throw std::invalid_argument("realization must be n x K");

  std::vector<double> err;
  err.reserve(g.num_edges());
  for (const Edge &e: g.edges())
    err.push_back(std::abs((x.row(e.u) - x.row(e.v)).norm() - e.d));
  return err;
}

double mde(const Realization &x, const WeightedGraph &g) {
  return quality(x, g, 0).mde;
}

double lde(const Realization &x, const WeightedGraph &g) {
  return quality(x, g, 0).lde;
}

QualityReport quality(const Realization &x, const WeightedGraph &g,
                      double objective) {
  QualityReport q;
  q.objective = objective;
  q.edge_errors = distance_errors(x, g);
  if (!q.edge_errors.empty()) {
    q.lde = *std::max_element(q.edge_errors.begin(), q.edge_errors.end());
    q.mde = std::accumulate(q.edge_errors.begin(), q.edge_errors.end(), 0.0)
            / static_cast<double>(q.edge_errors.size());
  }
  // The mean can exceed the max by one rounding step when all errors agree.
  q.mde = std::min(q.mde, q.lde);
  assert(q.lde >= q.mde && q.mde >= 0);
  return q;
}
}  // namespace cycledg
