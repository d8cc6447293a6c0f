//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/decomposition.h"

#include <algorithm>
#include <vector>

namespace cycledg {
namespace {
  struct Frame {
    VertexId v;
    EdgeId via;        // edge used to enter v, -1 at a root
    std::size_t next;  // next position in g.incident(v)
  };
}  // namespace

// Iterative Hopcroft-Tarjan: edges are stacked as they are first seen, and a
// block is popped whenever a child's low-point does not climb above its
// parent.
BlockDecomposition one_decomposition(const WeightedGraph &g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> edge_seen(g.num_edges(), 0), is_cut(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Frame> frames;

  BlockDecomposition out;
  int timer = 0;

  auto pop_block = [&](EdgeId until) {
    Block b;
    EdgeId e;
    do {
      e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
    } while (e != until);

    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()),
                     b.vertices.end());
    b.biconnected = b.edges.size() > 1;
    out.blocks.push_back(std::move(b));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] >= 0)
      continue;

    int root_children = 0;
    disc[root] = low[root] = timer++;
    frames.push_back({ root, -1, 0 });

    while (!frames.empty()) {
      Frame &fr = frames.back();
      const auto &inc = g.incident(fr.v);
      if (fr.next < inc.size()) {
        EdgeId e = inc[fr.next++];
        if (e == fr.via || edge_seen[e] != 0)
          continue;

        edge_seen[e] = 1;
        edge_stack.push_back(e);
        VertexId w = g.other_end(e, fr.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          if (fr.v == root)
            ++root_children;
          frames.push_back({ w, e, 0 });
        } else {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
        continue;
      }

      Frame done = fr;
      frames.pop_back();
      if (frames.empty())
        break;

      VertexId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        if (parent != root)
          is_cut[parent] = 1;
        pop_block(done.via);
      }
    }

    if (root_children > 1)
      is_cut[root] = 1;
  }

  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v] != 0)
      out.cut_vertices.push_back(v);
  }

  // Blocks are emitted in DFS completion order; sort for a stable layout.
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block &a, const Block &b) {
              return a.edges.front() < b.edges.front();
            });

  for (int bi = 0; bi < static_cast<int>(out.blocks.size()); ++bi) {
    for (int ci = 0; ci < static_cast<int>(out.cut_vertices.size()); ++ci) {
      const auto &vs = out.blocks[bi].vertices;
      if (std::binary_search(vs.begin(), vs.end(), out.cut_vertices[ci]))
        out.tree_edges.emplace_back(bi, ci);
    }
  }
  return out;
}
}  // namespace cycledg
