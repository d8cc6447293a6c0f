//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/euler.h"

#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"

namespace cycledg {
namespace {
  using test::make_graph;

  WeightedGraph path3() { return make_graph(3, { { 0, 1 }, { 1, 2 } }); }

  WeightedGraph c4() {
    return make_graph(4, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 0, 3 } });
  }

  WeightedGraph k4() {
    return make_graph(
        4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
  }

  void expect_even(const WeightedGraph &g, const Multiplicity &h) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      ASSERT_GE(h[e], 1);
      deg[g.edge(e).u] += h[e];
      deg[g.edge(e).v] += h[e];
    }
    for (int d: deg)
      EXPECT_EQ(d % 2, 0);
  }

  void expect_covering(const WeightedGraph &g, const Multiplicity &h,
                       const std::vector<CircuitArc> &c) {
    ASSERT_EQ(static_cast<int>(c.size()),
              std::accumulate(h.begin(), h.end(), 0));
    std::set<std::pair<EdgeId, int>> used;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Edge &e = g.edge(c[i].edge);
      EXPECT_TRUE((c[i].from == e.u && c[i].to == e.v)
                  || (c[i].from == e.v && c[i].to == e.u));
      EXPECT_GE(c[i].copy, 1);
      EXPECT_LE(c[i].copy, h[c[i].edge]);
      EXPECT_TRUE(used.emplace(c[i].edge, c[i].copy).second);
      EXPECT_EQ(c[i].to, c[(i + 1) % c.size()].from);
    }
  }

  void expect_simple(const std::vector<Arc> &arcs) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Arc &a: arcs) {
      EXPECT_NE(a.tail, a.head);
      EXPECT_TRUE(
          seen.emplace(std::min(a.tail, a.head), std::max(a.tail, a.head))
              .second);
    }
  }
}  // namespace

TEST(Eulerize, EvenGraphUnchanged) {
  EXPECT_EQ(eulerize(c4()), (Multiplicity { 1, 1, 1, 1 }));
}

TEST(Eulerize, PathDoublesBothEdges) {
  EXPECT_EQ(eulerize(path3()), (Multiplicity { 2, 2 }));
}

TEST(Eulerize, K4DuplicatesAPerfectMatching) {
  WeightedGraph g = k4();
  Multiplicity h = eulerize(g);
  expect_even(g, h);
  std::set<VertexId> covered;
  int dup = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    ASSERT_LE(h[e], 2);
    if (h[e] == 2) {
      ++dup;
      EXPECT_TRUE(covered.insert(g.edge(e).u).second);
      EXPECT_TRUE(covered.insert(g.edge(e).v).second);
    }
  }
  EXPECT_EQ(dup, 2);
}

TEST(Eulerize, RejectsDisconnected) {
  EXPECT_THROW(eulerize(make_graph(4, { { 0, 1 }, { 2, 3 } })), GraphError);
}

TEST(EulerCircuit, C4) {
  WeightedGraph g = c4();
  Multiplicity h(4, 1);
  auto c = euler_circuit(g, h);
  EXPECT_EQ(c.size(), 4U);
  expect_covering(g, h, c);
}

TEST(EulerCircuit, PathVisitsBothCopies) {
  WeightedGraph g = path3();
  Multiplicity h { 2, 2 };
  auto c = euler_circuit(g, h);
  expect_covering(g, h, c);
  std::vector<VertexId> walk;
  for (const CircuitArc &a: c)
    walk.push_back(a.from);
  EXPECT_EQ(walk, (std::vector<VertexId> { 0, 1, 2, 1 }));
}

TEST(EulerCircuit, K4LengthEight) {
  WeightedGraph g = k4();
  Multiplicity h = eulerize(g);
  auto c = euler_circuit(g, h);
  EXPECT_EQ(c.size(), 8U);
  expect_covering(g, h, c);
}

TEST(EulerCircuit, RejectsOddOrDisconnected) {
  EXPECT_THROW(euler_circuit(path3(), { 1, 1 }), GraphError);
  EXPECT_THROW(euler_circuit(make_graph(6, { { 0, 1 }, { 1, 2 }, { 0, 2 },
                                             { 3, 4 }, { 4, 5 }, { 3, 5 } }),
                             Multiplicity(6, 1)),
               GraphError);
}

TEST(TwoPathReplacement, IdentityWhenNoCopies) {
  WeightedGraph g = c4();
  ArcSet arcs = orient(g);
  Multiplicity h(4, 1);
  EulerStructure es = two_path_replacement(g, arcs, h, euler_circuit(g, h));
  EXPECT_TRUE(es.added_vertices.empty());
  EXPECT_EQ(es.num_vertices, 4);
  EXPECT_EQ(es.transformed_circuit.size(), 4U);
  for (EdgeId e = 0; e < 4; ++e) {
    EXPECT_NE(es.original_sign[e], 0);
    EXPECT_EQ(es.row_coef[e], es.original_sign[e]);
  }
  // C4 traversed once is its own cycle vector.
  std::vector<int> ref = test::walk_vector(g, { 0, 1, 2, 3 });
  int s = es.row_coef[0] == ref[0] ? 1 : -1;
  for (EdgeId e = 0; e < 4; ++e)
    EXPECT_EQ(es.row_coef[e], s * ref[e]);
}

TEST(TwoPathReplacement, PathGetsTwoFreshVertices) {
  WeightedGraph g = path3();
  EulerStructure es = build_euler_structure(g, orient(g));
  EXPECT_EQ(es.added_vertices.size(), 2U);
  EXPECT_EQ(es.num_vertices, 5);
  EXPECT_EQ(es.added_vertices.at({ 0, 2 }), 3);
  EXPECT_EQ(es.added_vertices.at({ 1, 2 }), 4);
  EXPECT_EQ(es.transformed_circuit.size(), 6U);
  expect_simple(es.transformed_circuit);
  // Each edge is walked once forward and once back.
  EXPECT_EQ(es.row_coef, (std::vector<int> { 0, 0 }));
  EXPECT_EQ(es.original_sign, (std::vector<int> { 1, 1 }));
}

TEST(TwoPathReplacement, K4GrowsByTwo) {
  WeightedGraph g = k4();
  EulerStructure es = build_euler_structure(g, orient(g));
  EXPECT_EQ(es.added_vertices.size(), 2U);
  EXPECT_EQ(es.circuit.size(), 8U);
  EXPECT_EQ(es.transformed_circuit.size(), 10U);
  expect_simple(es.transformed_circuit);
}

TEST(TwoPathReplacement, RejectsBrokenCircuit) {
  WeightedGraph g = c4();
  Multiplicity h(4, 1);
  auto c = euler_circuit(g, h);
  auto short_c = c;
  short_c.pop_back();
  EXPECT_THROW(two_path_replacement(g, orient(g), h, short_c), GraphError);
  auto dup = c;
  dup[1] = dup[0];
  EXPECT_THROW(two_path_replacement(g, orient(g), h, dup), GraphError);
}

TEST(EulerProperty, RandomConnectedGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = test::random_graph(rng, 2 + trial % 25, 0.2, true);
    ArcSet arcs = orient(g);
    Multiplicity h = eulerize(g);
    expect_even(g, h);
    auto c = euler_circuit(g, h);
    expect_covering(g, h, c);
    EulerStructure es = two_path_replacement(g, arcs, h, c);
    expect_simple(es.transformed_circuit);
    int extra = std::accumulate(h.begin(), h.end(), 0) - g.num_edges();
    EXPECT_EQ(static_cast<int>(es.added_vertices.size()), extra);
    EXPECT_EQ(es.transformed_circuit.size(), c.size() + extra);

    // The aggregated row is a cycle-space vector: conservation at each
    // vertex under the net signed counts.
    std::vector<int> net(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      net[arcs[e].tail] -= es.row_coef[e];
      net[arcs[e].head] += es.row_coef[e];
    }
    for (int v: net)
      EXPECT_EQ(v, 0);
  }
}
}  // namespace cycledg
