//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_EULER_H_
#define CYCLEDG_EULER_H_

#include <map>
#include <utility>
#include <vector>

#include "cycledg/graph.h"

namespace cycledg {
/// Number of parallel copies of each edge in the Eulerized multigraph.
using Multiplicity = std::vector<int>;

/// Duplicates edges along BFS shortest paths between greedily paired
/// odd-degree vertices until every degree is even. Throws GraphError on a
/// disconnected graph.
Multiplicity eulerize(const WeightedGraph &g);

/// One traversal of copy `copy` (1-based) of edge `edge` from `from` to `to`.
struct CircuitArc {
  EdgeId edge;
  int copy;
  VertexId from;
  VertexId to;

  friend bool operator==(const CircuitArc &, const CircuitArc &) = default;
};

/// Hierholzer's algorithm on the multigraph. Starts at vertex 0 and always
/// leaves through the unused copy with the smallest head, then the smallest
/// edge id and copy. Throws GraphError if a degree is odd or the graph is
/// disconnected.
std::vector<CircuitArc> euler_circuit(const WeightedGraph &g,
                                      const Multiplicity &mult);

struct EulerStructure {
  Multiplicity multiplicity;
  std::vector<CircuitArc> circuit;

  // Fresh vertex replacing each copy h > 1; ids start at g.num_vertices().
  std::map<std::pair<EdgeId, int>, VertexId> added_vertices;
  int num_vertices = 0;  // |V| + number of added vertices

  // Circuit on the simple digraph after 2-path replacement.
  std::vector<Arc> transformed_circuit;

  // Traversal direction of copy 1 of each edge relative to the arc set.
  std::vector<int> original_sign;
  // Net signed traversal count of each edge over all of its copies; the
  // coefficients of the aggregated circuit row.
  std::vector<int> row_coef;
};

/// Replaces every traversal of a copy h > 1 by a 2-path through a fresh
/// vertex, so that the resulting digraph has no parallel or antiparallel arcs.
EulerStructure two_path_replacement(const WeightedGraph &g, const ArcSet &arcs,
                                    const Multiplicity &mult,
                                    const std::vector<CircuitArc> &circuit);

inline EulerStructure build_euler_structure(const WeightedGraph &g,
                                            const ArcSet &arcs) {
  Multiplicity mult = eulerize(g);
  return two_path_replacement(g, arcs, mult, euler_circuit(g, mult));
}
}  // namespace cycledg

#endif  // CYCLEDG_EULER_H_
