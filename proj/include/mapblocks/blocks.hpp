#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mapblocks/rooted_map.hpp"

namespace mapblocks {

// Edge-disjoint decomposition into maximal 2-connected submaps. Loops always
// form their own block (map convention: a vertex carrying a loop plus any
// other edge is separating). Bridges are single-edge blocks.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // dart ids, sorted; blocks ordered by smallest dart
  std::vector<int> block_of;             // dart -> block index
  std::vector<int> cut_vertices;         // vertex ids incident to >= 2 blocks, sorted
};

namespace detail {

struct EdgeRef {
  int u, v;   // endpoint vertex ids
  int dart;   // representative dart (the smaller of the pair)
};

// Iterative biconnected-components DFS (lowlink with an edge stack) on the
// loopless multigraph. Parallel edges are distinct edges and therefore form
// cycles, which is exactly the map notion of 2-connectivity.
inline void biconnected_edge_groups(int nv, const std::vector<EdgeRef>& edges,
                                    std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge id, other endpoint)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({e, edges[e].v});
    adj[edges[e].v].push_back({e, edges[e].u});
  }
  std::vector<int> disc(nv, -1), low(nv, 0), parent_edge(nv, -1);
  std::vector<std::size_t> it(nv, 0);
  std::vector<int> estack;
  std::vector<char> edge_seen(edges.size(), 0);
  int timer = 0;
  for (int s = 0; s < nv; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<int> vstack = {s};
    disc[s] = low[s] = timer++;
    while (!vstack.empty()) {
      const int v = vstack.back();
      if (it[v] < adj[v].size()) {
        const auto [e, w] = adj[v][it[v]++];
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        estack.push_back(e);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          parent_edge[w] = e;
          vstack.push_back(w);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        vstack.pop_back();
        if (!vstack.empty()) {
          const int p = vstack.back();
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            groups.emplace_back();
            auto& g = groups.back();
            for (;;) {
              const int e = estack.back();
              estack.pop_back();
              g.push_back(e);
              if (e == parent_edge[v]) break;
            }
          }
        }
      }
    }
  }
}

}  // namespace detail

inline BlockDecomposition blocks(const RootedMap& m) {
  if (m.is_trivial()) throw std::invalid_argument("blocks: trivial map has no blocks");
  int nv = 0;
  const std::vector<int> vid = dart_vertices(m, &nv);
  std::vector<detail::EdgeRef> plain;
  std::vector<std::vector<int>> dart_groups;
  for (int d = 0; d < m.num_darts; ++d) {
    if (d > m.twin[d]) continue;
    const int u = vid[d], v = vid[m.twin[d]];
    if (u == v)
      dart_groups.push_back({d, m.twin[d]});  // loop: its own block
    else
      plain.push_back({u, v, d});
  }
  std::vector<std::vector<int>> egroups;
  detail::biconnected_edge_groups(nv, plain, egroups);
  for (const auto& g : egroups) {
    std::vector<int> darts;
    for (int e : g) {
      darts.push_back(plain[e].dart);
      darts.push_back(m.twin[plain[e].dart]);
    }
    dart_groups.push_back(std::move(darts));
  }
  for (auto& g : dart_groups) std::sort(g.begin(), g.end());
  std::sort(dart_groups.begin(), dart_groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  BlockDecomposition out;
  out.blocks = std::move(dart_groups);
  out.block_of.assign(m.num_darts, -1);
  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b)
    for (int d : out.blocks[b]) out.block_of[d] = b;
  // cut vertices: incident to at least two distinct blocks
  std::vector<int> first_block(nv, -1);
  std::vector<char> cut(nv, 0);
  for (int d = 0; d < m.num_darts; ++d) {
    const int v = vid[d], b = out.block_of[d];
    if (first_block[v] < 0)
      first_block[v] = b;
    else if (first_block[v] != b)
      cut[v] = 1;
  }
  for (int v = 0; v < nv; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  return out;
}

// Direct 2-connectivity test (independent of blocks()): a map with at least
// two edges is separable iff it carries a loop or its underlying multigraph
// has an articulation vertex. Single-edge maps (loop or link) and the trivial
// map count as 2-connected.
inline bool is_two_connected(const RootedMap& m) {
  if (m.is_trivial() || m.edges() == 1) return true;
  int nv = 0;
  const std::vector<int> vid = dart_vertices(m, &nv);
  std::vector<detail::EdgeRef> edges;
  for (int d = 0; d < m.num_darts; ++d) {
    if (d > m.twin[d]) continue;
    const int u = vid[d], v = vid[m.twin[d]];
    if (u == v) return false;  // loop plus any other edge separates
    edges.push_back({u, v, d});
  }
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({e, edges[e].v});
    adj[edges[e].v].push_back({e, edges[e].u});
  }
  std::vector<int> disc(nv, -1), low(nv, 0);
  std::vector<std::size_t> it(nv, 0);
  std::vector<int> enter_edge(nv, -1);
  std::vector<int> vstack = {0};
  disc[0] = low[0] = 0;
  int timer = 1, root_children = 0;
  while (!vstack.empty()) {
    const int v = vstack.back();
    if (it[v] < adj[v].size()) {
      const auto [e, w] = adj[v][it[v]++];
      if (e == enter_edge[v]) continue;  // skip only the tree-edge copy
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        enter_edge[w] = e;
        if (v == 0) ++root_children;
        vstack.push_back(w);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      vstack.pop_back();
      if (!vstack.empty()) {
        const int p = vstack.back();
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  return root_children < 2;
}

}  // namespace mapblocks
