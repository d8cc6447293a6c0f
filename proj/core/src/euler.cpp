//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/euler.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

namespace cycledg {
namespace {
  std::vector<int> multigraph_degree(const WeightedGraph &g,
                                     const Multiplicity &mult) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      deg[g.edge(e).u] += mult[e];
      deg[g.edge(e).v] += mult[e];
    }
    return deg;
  }

  // Shortest path (edge ids) from s to the nearest vertex accepted by
  // `target`, preferring the smallest vertex id among the nearest ones.
  template <class Pred>
  std::pair<VertexId, std::vector<EdgeId>>
  nearest_path(const WeightedGraph &g, VertexId s, Pred target) {
    const int n = g.num_vertices();
    std::vector<EdgeId> via(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<VertexId> layer { s }, next;
    seen[s] = 1;

    VertexId found = -1;
    while (!layer.empty() && found < 0) {
      next.clear();
      for (VertexId v: layer) {
        for (EdgeId e: g.incident(v)) {
          VertexId w = g.other_end(e, v);
          if (seen[w] != 0)
            continue;
          seen[w] = 1;
          via[w] = e;
          next.push_back(w);
        }
      }
      for (VertexId w: next) {
        if (target(w) && (found < 0 || w < found))
          found = w;
      }
      layer.swap(next);
    }

    std::vector<EdgeId> path;
    for (VertexId v = found; v >= 0 && v != s;) {
      EdgeId e = via[v];
      path.push_back(e);
      v = g.other_end(e, v);
    }
    return { found, path };
  }

  void check_connected(const WeightedGraph &g) {
    if (!is_connected(g))
      throw GraphError("graph is not connected; no Eulerian circuit exists");
  }
}  // namespace

Multiplicity eulerize(const WeightedGraph &g) {
  check_connected(g);

  Multiplicity mult(g.num_edges(), 1);
  for (;;) {
    std::vector<int> deg = multigraph_degree(g, mult);
    std::vector<char> odd(g.num_vertices(), 0);
    bool any = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      odd[v] = static_cast<char>(deg[v] % 2);
      any = any || odd[v] != 0;
    }
    if (!any)
      break;

    for (VertexId s = 0; s < g.num_vertices(); ++s) {
      if (odd[s] == 0)
        continue;

      odd[s] = 0;
      auto [mate, path] =
          nearest_path(g, s, [&](VertexId w) { return odd[w] != 0; });
      if (mate < 0)
        throw GraphError("unpaired odd-degree vertex");
      for (EdgeId e: path)
        ++mult[e];
      odd[mate] = 0;
    }
  }
  return mult;
}

std::vector<CircuitArc> euler_circuit(const WeightedGraph &g,
                                      const Multiplicity &mult) {
  if (static_cast<int>(mult.size()) != g.num_edges())
    throw GraphError("multiplicity size does not match edge count");
  for (int h: mult) {
    if (h < 1)
      throw GraphError("edge multiplicity must be at least 1");
  }
  check_connected(g);

  std::vector<int> deg = multigraph_degree(g, mult);
  for (int d: deg) {
    if (d % 2 != 0)
      throw GraphError("odd-degree vertex; multigraph is not Eulerian");
  }

  // slot = offset[e] + copy - 1
  std::vector<int> offset(g.num_edges() + 1, 0);
  std::partial_sum(mult.begin(), mult.end(), offset.begin() + 1);
  const int total = offset.back();

  struct Out {
    VertexId head;
    EdgeId edge;
    int copy;
  };
  std::vector<std::vector<Out>> out(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (EdgeId e: g.incident(v)) {
      for (int h = 1; h <= mult[e]; ++h)
        out[v].push_back({ g.other_end(e, v), e, h });
    }
    std::sort(out[v].begin(), out[v].end(), [](const Out &a, const Out &b) {
      return std::tie(a.head, a.edge, a.copy)
             < std::tie(b.head, b.edge, b.copy);
    });
  }

  std::vector<char> used(total, 0);
  std::vector<std::size_t> cursor(g.num_vertices(), 0);

  struct Step {
    VertexId v;
    EdgeId edge;  // edge copy used to reach v, -1 at the start
    int copy;
  };
  std::vector<Step> stack { { 0, -1, 0 } }, path;
  while (!stack.empty()) {
    VertexId v = stack.back().v;
    auto &cur = cursor[v];
    while (cur < out[v].size()
           && used[offset[out[v][cur].edge] + out[v][cur].copy - 1] != 0)
      ++cur;

    if (cur < out[v].size()) {
      const Out &o = out[v][cur];
      used[offset[o.edge] + o.copy - 1] = 1;
      stack.push_back({ o.head, o.edge, o.copy });
    } else {
      path.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(path.begin(), path.end());

  std::vector<CircuitArc> circuit;
  circuit.reserve(total);
  for (std::size_t i = 1; i < path.size(); ++i) {
    circuit.push_back(
        { path[i].edge, path[i].copy, path[i - 1].v, path[i].v });
  }
  return circuit;
}

EulerStructure two_path_replacement(const WeightedGraph &g, const ArcSet &arcs,
                                    const Multiplicity &mult,
                                    const std::vector<CircuitArc> &circuit) {
  const int total = std::accumulate(mult.begin(), mult.end(), 0);
  if (static_cast<int>(circuit.size()) != total)
    throw GraphError("circuit length does not match the multigraph");

  EulerStructure es;
  es.multiplicity = mult;
  es.circuit = circuit;
  es.original_sign.assign(g.num_edges(), 0);
  es.row_coef.assign(g.num_edges(), 0);

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (int h = 2; h <= mult[e]; ++h)
      es.added_vertices.emplace(std::make_pair(e, h), 0);
  }
  es.num_vertices = g.num_vertices();
  for (auto &[key, id]: es.added_vertices)
    id = es.num_vertices++;

  std::vector<std::vector<char>> seen(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    seen[e].assign(mult[e] + 1, 0);

  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const CircuitArc &ca = circuit[i];
    if (ca.edge < 0 || ca.edge >= g.num_edges() || ca.copy < 1
        || ca.copy > mult[ca.edge] || seen[ca.edge][ca.copy] != 0)
      throw GraphError("circuit does not cover each edge copy exactly once");
    const Edge &ed = g.edge(ca.edge);
    if (!((ca.from == ed.u && ca.to == ed.v)
          || (ca.from == ed.v && ca.to == ed.u)))
      throw GraphError("circuit arc does not match its edge");
    if (ca.to != circuit[(i + 1) % circuit.size()].from)
      throw GraphError("circuit is not a closed walk");
    seen[ca.edge][ca.copy] = 1;

    const int sign = ca.from == arcs[ca.edge].tail ? 1 : -1;
    es.row_coef[ca.edge] += sign;
    if (ca.copy == 1) {
      es.original_sign[ca.edge] = sign;
      es.transformed_circuit.push_back({ ca.from, ca.to });
    } else {
      VertexId mid = es.added_vertices.at({ ca.edge, ca.copy });
      es.transformed_circuit.push_back({ ca.from, mid });
      es.transformed_circuit.push_back({ mid, ca.to });
    }
  }
  return es;
}
}  // namespace cycledg
