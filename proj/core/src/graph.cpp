//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cycledg {
WeightedGraph::WeightedGraph(int n, int dim, std::vector<Edge> edges)
    : n_(n), dim_(dim), edges_(std::move(edges)) {
  if (n_ < 1)
    throw GraphError("vertex count must be positive");
  if (dim_ < 1)
    throw GraphError("embedding dimension must be positive");

  adj_.resize(n_);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge &ed = edges_[e];
    const std::string where = "edge " + std::to_string(e + 1) + ": ";
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw GraphError(where + "vertex id out of range");
    if (ed.u == ed.v)
      throw GraphError(where + "self-loop");
    if (!std::isfinite(ed.d) || ed.d < 0)
      throw GraphError(where + "negative or non-finite weight");
    if (!seen.emplace(std::min(ed.u, ed.v), std::max(ed.u, ed.v)).second)
      throw GraphError(where + "duplicate edge");

    adj_[ed.u].push_back(e);
    adj_[ed.v].push_back(e);
  }
}

double WeightedGraph::total_weight() const {
  double sum = 0;
  for (const Edge &e: edges_)
    sum += e.d;
  return sum;
}

bool operator==(const WeightedGraph &a, const WeightedGraph &b) {
  if (a.n_ != b.n_ || a.dim_ != b.dim_ || a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge &x = a.edges_[i], &y = b.edges_[i];
    // NOLINTNEXTLINE(clang-diagnostic-float-equal)
    if (x.u != y.u || x.v != y.v || x.d != y.d)
      return false;
  }
  return true;
}

Components connected_components(const WeightedGraph &g) {
  Components comp;
  comp.label.assign(g.num_vertices(), -1);

  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (comp.label[s] >= 0)
      continue;

    comp.label[s] = comp.count;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e: g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (comp.label[w] < 0) {
          comp.label[w] = comp.count;
          stack.push_back(w);
        }
      }
    }
    ++comp.count;
  }
  return comp;
}

ArcSet orient(const WeightedGraph &g) {
  ArcSet arcs;
  arcs.reserve(g.num_edges());
  for (const Edge &e: g.edges())
    arcs.push_back({ std::min(e.u, e.v), std::max(e.u, e.v) });
  return arcs;
}

namespace {
  struct RootedForest {
    std::vector<VertexId> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<int> depth;
  };

  // BFS restricted to `allowed` edges, roots at the smallest unvisited
  // vertex. Neighbours are scanned in increasing edge order.
  RootedForest bfs_forest(const WeightedGraph &g,
                          const std::vector<char> &allowed) {
    const int n = g.num_vertices();
    RootedForest f { std::vector<VertexId>(n, -1),
                     std::vector<EdgeId>(n, -1), std::vector<int>(n, -1) };

    std::queue<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
      if (f.depth[root] >= 0)
        continue;

      f.depth[root] = 0;
      queue.push(root);
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e: g.incident(v)) {
          if (allowed[e] == 0)
            continue;
          VertexId w = g.other_end(e, v);
          if (f.depth[w] >= 0)
            continue;
          f.depth[w] = f.depth[v] + 1;
          f.parent[w] = v;
          f.parent_edge[w] = e;
          queue.push(w);
        }
      }
    }
    return f;
  }

  // +1 if walking a -> b follows the arc of e, -1 otherwise.
  int walk_sign(const Arc &arc, VertexId a) {
    return arc.tail == a ? 1 : -1;
  }
}  // namespace

std::vector<EdgeId> spanning_forest(const WeightedGraph &g) {
  RootedForest f =
      bfs_forest(g, std::vector<char>(g.num_edges(), static_cast<char>(1)));

  std::vector<EdgeId> tree;
  for (EdgeId e: f.parent_edge) {
    if (e >= 0)
      tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

int SignedCycle::coef(EdgeId e) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), e,
      [](const CycleTerm &t, EdgeId id) { return t.edge < id; });
  return it != terms.end() && it->edge == e ? it->coef : 0;
}

SignedCycle combine(const SignedCycle &a, const SignedCycle &b, int scale) {
  SignedCycle out;
  auto ia = a.terms.begin(), ib = b.terms.begin();
  while (ia != a.terms.end() || ib != b.terms.end()) {
    CycleTerm t;
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->edge < ib->edge)) {
      t = *ia++;
    } else if (ia == a.terms.end() || ib->edge < ia->edge) {
      t = { ib->edge, scale * ib->coef };
      ++ib;
    } else {
      t = { ia->edge, ia->coef + scale * ib->coef };
      ++ia;
      ++ib;
    }
    if (t.coef != 0)
      out.terms.push_back(t);
  }
  return out;
}

SignedCycle cycle_from_walk(const WeightedGraph &g, const ArcSet &arcs,
                            const std::vector<VertexId> &walk) {
  SignedCycle acc;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    VertexId a = walk[i], b = walk[(i + 1) % walk.size()];
    EdgeId found = -1;
    for (EdgeId e: g.incident(a)) {
      if (g.other_end(e, a) == b) {
        found = e;
        break;
      }
    }
    if (found < 0)
      throw GraphError("walk uses a non-edge");
    acc = combine(acc, SignedCycle { { { found, walk_sign(arcs[found], a) } } });
  }
  return acc;
}

CycleBasis fundamental_cycle_basis(const WeightedGraph &g, const ArcSet &arcs,
                                   const std::vector<EdgeId> &forest) {
  std::vector<char> in_forest(g.num_edges(), 0);
  for (EdgeId e: forest)
    in_forest[e] = 1;

  RootedForest f = bfs_forest(g, in_forest);

  CycleBasis basis;
  basis.forest = forest;
  std::sort(basis.forest.begin(), basis.forest.end());

  for (EdgeId chord = 0; chord < g.num_edges(); ++chord) {
    if (in_forest[chord] != 0)
      continue;

    const Arc &ca = arcs[chord];
    std::vector<CycleTerm> terms { { chord, 1 } };

    // Walk from the chord's head back to its tail through the forest:
    // climb from both ends to the lowest common ancestor. The head side is
    // walked upward, the tail side downward.
    VertexId a = ca.head, b = ca.tail;
    while (a != b) {
      if (f.depth[a] >= f.depth[b]) {
        EdgeId e = f.parent_edge[a];
        terms.push_back({ e, walk_sign(arcs[e], a) });
        a = f.parent[a];
      } else {
        EdgeId e = f.parent_edge[b];
        terms.push_back({ e, walk_sign(arcs[e], f.parent[b]) });
        b = f.parent[b];
      }
    }

    std::sort(terms.begin(), terms.end(),
              [](const CycleTerm &x, const CycleTerm &y) {
                return x.edge < y.edge;
              });
    basis.cycles.push_back(SignedCycle { std::move(terms) });
    basis.chords.push_back(chord);
  }
  return basis;
}

bool verify_cycle(const WeightedGraph &g, const ArcSet &arcs,
                  const SignedCycle &c) {
  std::vector<long long> net(g.num_vertices(), 0);
  for (const CycleTerm &t: c.terms) {
    if (t.edge < 0 || t.edge >= g.num_edges())
      return false;
    net[arcs[t.edge].tail] -= t.coef;
    net[arcs[t.edge].head] += t.coef;
  }
  return std::all_of(net.begin(), net.end(),
                     [](long long x) { return x == 0; });
}
}  // namespace cycledg
