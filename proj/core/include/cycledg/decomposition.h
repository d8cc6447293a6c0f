//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_DECOMPOSITION_H_
#define CYCLEDG_DECOMPOSITION_H_

#include <utility>
#include <vector>

#include "cycledg/graph.h"

namespace cycledg {
struct Block {
  std::vector<EdgeId> edges;       // increasing
  std::vector<VertexId> vertices;  // increasing
  // A single bridge edge is a tree block; everything larger is biconnected.
  bool biconnected = false;
};

/// Blocks of the graph together with its cut vertices. Every edge belongs to
/// exactly one block, and two blocks share at most one vertex, which is then a
/// cut vertex. Isolated vertices belong to no block.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<VertexId> cut_vertices;  // increasing
  // Block-cut tree: (block index, index into cut_vertices) incidences.
  std::vector<std::pair<int, int>> tree_edges;
};

BlockDecomposition one_decomposition(const WeightedGraph &g);
}  // namespace cycledg

#endif  // CYCLEDG_DECOMPOSITION_H_
