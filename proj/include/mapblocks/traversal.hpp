#pragma once

#include <queue>
#include <stdexcept>
#include <vector>

#include "mapblocks/rooted_map.hpp"

namespace mapblocks {

// Vertex order from breadth-first search rooted at the tail of the root dart.
// order[r] is the vertex with rank r; rank inverts it.
struct VertexOrdering {
  std::vector<int> order;
  std::vector<int> rank;
};

// parent_dart[v] is the dart from v toward its BFS parent (-1 at the root
// vertex). Exactly the tree edges selected by the counterclockwise scan rule.
struct SpanningTree {
  std::vector<int> parent_dart;
};

struct BfsData {
  VertexOrdering ordering;
  SpanningTree tree;
  std::vector<int> dart_vertex;
};

// BFS from the root vertex. At each processed vertex the incident darts are
// scanned in counterclockwise order starting from the root dart (at the root
// vertex) or from the dart toward the parent (elsewhere); new vertices are
// discovered in scan order, which also fixes the tree edge among parallel
// copies.
inline BfsData bfs_data(const RootedMap& m) {
  if (m.is_trivial()) return {{{0}, {0}}, {{-1}}, {}};
  int nv = 0;
  std::vector<int> vid = dart_vertices(m, &nv);
  BfsData r;
  r.dart_vertex = vid;
  r.ordering.rank.assign(nv, -1);
  r.tree.parent_dart.assign(nv, -1);
  const int v1 = vid[m.root];
  r.ordering.rank[v1] = 0;
  r.ordering.order.push_back(v1);
  std::queue<int> q;
  q.push(v1);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    const int start = (v == v1) ? m.root : r.tree.parent_dart[v];
    int d = start;
    do {
      const int u = vid[m.twin[d]];
      if (r.ordering.rank[u] < 0) {
        r.ordering.rank[u] = static_cast<int>(r.ordering.order.size());
        r.ordering.order.push_back(u);
        r.tree.parent_dart[u] = m.twin[d];
        q.push(u);
      }
      d = m.next[d];
    } while (d != start);
  }
  for (int v = 0; v < nv; ++v)
    if (r.ordering.rank[v] < 0) throw std::invalid_argument("bfs_data: map not connected");
  return r;
}

inline VertexOrdering bfs_order(const RootedMap& m) { return bfs_data(m).ordering; }

inline SpanningTree bfs_tree(const RootedMap& m) { return bfs_data(m).tree; }

// Total order on darts: by BFS rank of the tail, then counterclockwise from
// the root dart (at the root vertex) or from the dart toward the parent.
inline std::vector<int> corner_order(const RootedMap& m) {
  if (m.is_trivial()) return {};
  const BfsData b = bfs_data(m);
  std::vector<int> out;
  out.reserve(m.num_darts);
  for (std::size_t r = 0; r < b.ordering.order.size(); ++r) {
    const int v = b.ordering.order[r];
    const int start = (r == 0) ? m.root : b.tree.parent_dart[v];
    int d = start;
    do {
      out.push_back(d);
      d = m.next[d];
    } while (d != start);
  }
  return out;
}

// dart -> position in corner_order.
inline std::vector<int> corner_rank(const RootedMap& m) {
  const auto ord = corner_order(m);
  std::vector<int> rank(m.num_darts, -1);
  for (int i = 0; i < static_cast<int>(ord.size()); ++i) rank[ord[i]] = i;
  return rank;
}

// Canonical relabelling: dart ids become corner-order ranks (root becomes 0).
// Two rooted maps are equal as combinatorial objects iff their canonical
// forms compare equal field by field.
inline RootedMap canonicalize(const RootedMap& m) {
  if (m.is_trivial()) return m;
  const auto rank = corner_rank(m);
  RootedMap c;
  c.num_darts = m.num_darts;
  c.twin.assign(m.num_darts, -1);
  c.next.assign(m.num_darts, -1);
  for (int d = 0; d < m.num_darts; ++d) {
    c.twin[rank[d]] = rank[m.twin[d]];
    c.next[rank[d]] = rank[m.next[d]];
  }
  c.root = rank[m.root];
  return c;
}

}  // namespace mapblocks
