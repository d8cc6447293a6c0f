//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_GRAPH_H_
#define CYCLEDG_GRAPH_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycledg {
// Vertices and edges are 0-based inside the library. Instance files use
// 1-based vertex ids; conversion happens in instance_io.
using VertexId = int;
using EdgeId = int;

class GraphError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u;
  VertexId v;
  double d;
};

/// Simple undirected graph with nonnegative edge weights, embedded in a
/// K-dimensional space. The edge order is the canonical edge index used by
/// every incidence vector and variable block in the library.
class WeightedGraph {
public:
  /// Validates and builds the graph. Throws GraphError on self-loops,
  /// duplicate unordered pairs, out-of-range ids, negative or non-finite
  /// weights, n < 1 or K < 1.
  WeightedGraph(int n, int dim, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int dim() const { return dim_; }

  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(EdgeId e) const { return edges_[e]; }

  // Incident edge ids per vertex, in increasing edge order.
  const std::vector<EdgeId> &incident(VertexId v) const { return adj_[v]; }
  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  double total_weight() const;

  friend bool operator==(const WeightedGraph &a, const WeightedGraph &b);

private:
  int n_;
  int dim_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adj_;
};

/// Component label per vertex, labels numbered by increasing smallest vertex.
struct Components {
  std::vector<int> label;
  int count = 0;
};

Components connected_components(const WeightedGraph &g);

inline bool is_connected(const WeightedGraph &g) {
  return connected_components(g).count == 1;
}

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc &, const Arc &) = default;
};

/// One arc per edge, indexed by edge id.
using ArcSet = std::vector<Arc>;

/// Orients every edge from the smaller to the larger vertex id.
ArcSet orient(const WeightedGraph &g);

/// Breadth-first spanning forest, rooted at the smallest vertex of each
/// component. Returns the tree edge ids in increasing order.
std::vector<EdgeId> spanning_forest(const WeightedGraph &g);

struct CycleTerm {
  EdgeId edge;
  int coef;

  friend bool operator==(const CycleTerm &, const CycleTerm &) = default;
};

/// Sparse signed incidence vector over the arcs, sorted by edge id with no
/// zero coefficients. Members of a cycle basis have coefficients in {-1, +1};
/// integer combinations of them may carry larger magnitudes.
struct SignedCycle {
  std::vector<CycleTerm> terms;

  int coef(EdgeId e) const;
  std::size_t size() const { return terms.size(); }

  friend bool operator==(const SignedCycle &, const SignedCycle &) = default;
};

/// a + scale * b, with cancelled entries removed.
SignedCycle combine(const SignedCycle &a, const SignedCycle &b, int scale = 1);

/// Builds the signed vector of a closed walk given as a vertex sequence
/// (first vertex not repeated at the end). Throws GraphError if two
/// consecutive vertices are not adjacent.
SignedCycle cycle_from_walk(const WeightedGraph &g, const ArcSet &arcs,
                            const std::vector<VertexId> &walk);

struct CycleBasis {
  std::vector<SignedCycle> cycles;
  std::vector<EdgeId> forest;
  // chords[i] is the non-tree edge that generated cycles[i]; it appears in
  // cycles[i] with coefficient +1.
  std::vector<EdgeId> chords;

  std::size_t size() const { return cycles.size(); }
};

/// One cycle per chord: the chord traversed along its arc followed by the
/// unique forest path from the chord's head back to its tail.
CycleBasis fundamental_cycle_basis(const WeightedGraph &g, const ArcSet &arcs,
                                   const std::vector<EdgeId> &forest);

inline CycleBasis fundamental_cycle_basis(const WeightedGraph &g) {
  return fundamental_cycle_basis(g, orient(g), spanning_forest(g));
}

/// True iff the signed vector conserves flow at every vertex.
bool verify_cycle(const WeightedGraph &g, const ArcSet &arcs,
                  const SignedCycle &c);
}  // namespace cycledg

#endif  // CYCLEDG_GRAPH_H_
