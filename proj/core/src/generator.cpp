//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/generator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cycledg {
Instance generate_instance(const GeneratorParams &params) {
  if (params.n < 2)
    throw std::invalid_argument("generator needs n >= 2");
  if (params.dim < 1)
    throw std::invalid_argument("generator needs K >= 1");
  if (!(params.density > 0 && params.density <= 1))
    throw std::invalid_argument("density must be in (0, 1]");

  const int n = params.n;
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double side = std::pow(static_cast<double>(n), 1.0 / params.dim);
  Realization x(n, params.dim);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < params.dim; ++k)
      x(i, k) = side * unit(rng);

  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < params.density)
        pairs.emplace(i, j);
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int t = 1; t < n; ++t) {
    std::uniform_int_distribution<int> pick(0, t - 1);
    int a = order[t], b = order[pick(rng)];
    pairs.emplace(std::min(a, b), std::max(a, b));
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j]: pairs)
    edges.push_back({ i, j, (x.row(i) - x.row(j)).norm() });

  return { WeightedGraph(n, params.dim, std::move(edges)), std::move(x) };
}

std::string generated_name(const GeneratorParams &params) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "gen-n%d-K%d-p%g-s%llu", params.n,
                params.dim, params.density,
                static_cast<unsigned long long>(params.seed));
  return buf;
}
}  // namespace cycledg
