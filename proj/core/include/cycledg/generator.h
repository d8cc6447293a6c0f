//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_GENERATOR_H_
#define CYCLEDG_GENERATOR_H_

#include <cstdint>
#include <string>

#include "cycledg/instance_io.h"

namespace cycledg {
struct GeneratorParams {
  int n = 20;
  int dim = 3;
  double density = 0.5;
  std::uint64_t seed = 1;
};

/// Random YES instance: n points uniform in a cube of side n^(1/K), each pair
/// kept with probability `density`, plus the edges of a random spanning tree.
/// Weights are the exact distances and the points are stored as the
/// instance's realization. Deterministic in the parameters.
Instance generate_instance(const GeneratorParams &params);

std::string generated_name(const GeneratorParams &params);
}  // namespace cycledg

#endif  // CYCLEDG_GENERATOR_H_
