#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mapblocks/blocks.hpp"
#include "mapblocks/rooted_map.hpp"
#include "mapblocks/traversal.hpp"

namespace mapblocks {

// Induced sub-map on a dart subset closed under twin: the rotation at each
// vertex skips darts outside the subset. Dart ids are compacted preserving
// order; to_parent maps them back.
struct SubMap {
  RootedMap map;
  std::vector<int> to_parent;
};

inline SubMap extract_submap(const RootedMap& m, const std::vector<int>& darts_sorted,
                             int root_dart) {
  std::vector<int> local(m.num_darts, -1);
  for (int i = 0; i < static_cast<int>(darts_sorted.size()); ++i) local[darts_sorted[i]] = i;
  if (local[root_dart] < 0) throw std::invalid_argument("extract_submap: root not in subset");
  SubMap s;
  s.to_parent = darts_sorted;
  s.map.num_darts = static_cast<int>(darts_sorted.size());
  s.map.twin.resize(s.map.num_darts);
  s.map.next.resize(s.map.num_darts);
  s.map.root = local[root_dart];
  for (int d : darts_sorted) {
    s.map.twin[local[d]] = local[m.twin[d]];
    int e = m.next[d];
    while (local[e] < 0) e = m.next[e];
    s.map.next[local[d]] = local[e];
  }
  return s;
}

namespace detail {

// Darts of the pendant submap hanging in the corner that starts at `seed`
// (= next of a root-block dart, itself outside the block). Flood over twin
// always and over next while staying outside the block.
inline std::vector<int> pendant_darts(const RootedMap& m, int seed,
                                      const std::vector<char>& in_block) {
  std::vector<char> seen(m.num_darts, 0);
  std::vector<int> stack = {seed}, out;
  seen[seed] = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    out.push_back(d);
    if (!seen[m.twin[d]]) {
      seen[m.twin[d]] = 1;
      stack.push_back(m.twin[d]);
    }
    const int e = m.next[d];
    if (!in_block[e] && !seen[e]) {
      seen[e] = 1;
      stack.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// The submap lying in the corner to the left of root-block dart uv, rooted at
// the edge following uv counterclockwise around its tail; trivial when that
// successor stays in the root block. Returned in canonical form.
inline RootedMap pendant_submap(const RootedMap& m, int uv) {
  if (m.is_trivial()) throw std::invalid_argument("pendant_submap: trivial map");
  const BlockDecomposition dec = blocks(m);
  if (dec.block_of[uv] != dec.block_of[m.root])
    throw std::invalid_argument("pendant_submap: not a root-block dart");
  std::vector<char> in_block(m.num_darts, 0);
  for (int d : dec.blocks[dec.block_of[m.root]]) in_block[d] = 1;
  const int e = m.next[uv];
  if (in_block[e]) return trivial_map();
  const auto darts = detail::pendant_darts(m, e, in_block);
  return canonicalize(extract_submap(m, darts, e).map);
}

// Ordered tree carrying one block per node: the root represents the root
// block; its 2|e(B)| children follow the block's corner order, a leaf where
// the corner is empty and a recursively built subtree where a pendant hangs.
// Leaves carry the trivial map. Blocks are stored in canonical form.
struct BlockTreeNode {
  RootedMap block;
  std::vector<BlockTreeNode> children;

  bool is_leaf() const { return children.empty(); }
};

using BlockTree = BlockTreeNode;

inline BlockTreeNode block_tree(const RootedMap& m) {
  if (m.is_trivial()) return {trivial_map(), {}};
  const BlockDecomposition dec = blocks(m);
  const auto& bdarts = dec.blocks[dec.block_of[m.root]];
  std::vector<char> in_block(m.num_darts, 0);
  for (int d : bdarts) in_block[d] = 1;
  const SubMap b = extract_submap(m, bdarts, m.root);

  BlockTreeNode node;
  node.block = canonicalize(b.map);
  for (int a_local : corner_order(b.map)) {
    const int a = b.to_parent[a_local];
    const int e = m.next[a];
    if (in_block[e]) {
      node.children.push_back({trivial_map(), {}});
    } else {
      const auto pdarts = detail::pendant_darts(m, e, in_block);
      const SubMap p = extract_submap(m, pdarts, e);
      node.children.push_back(block_tree(p.map));
    }
  }
  return node;
}

// Outdegrees in depth-first preorder; identifies the tree shape.
inline void tree_shape(const BlockTreeNode& t, std::vector<int>& out) {
  out.push_back(static_cast<int>(t.children.size()));
  for (const auto& c : t.children) tree_shape(c, out);
}

inline std::vector<int> tree_shape(const BlockTreeNode& t) {
  std::vector<int> out;
  tree_shape(t, out);
  return out;
}

// Descending nonzero block edge counts of the whole tree.
inline void tree_block_sizes(const BlockTreeNode& t, std::vector<int>& out) {
  if (!t.block.is_trivial()) out.push_back(t.block.edges());
  for (const auto& c : t.children) tree_block_sizes(c, out);
}

inline std::vector<int> tree_block_sizes(const BlockTreeNode& t) {
  std::vector<int> out;
  tree_block_sizes(t, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace detail {

// Growable rotation-system under construction during assembly.
struct MapBuilder {
  std::vector<int> twin, next;

  int append(const RootedMap& m) {
    const int offset = static_cast<int>(twin.size());
    for (int d = 0; d < m.num_darts; ++d) {
      twin.push_back(m.twin[d] + offset);
      next.push_back(m.next[d] + offset);
    }
    return offset;
  }
};

// Returns the dart id (in builder coordinates) of the assembled submap's root.
inline int assemble_into(const BlockTreeNode& t, MapBuilder& mb) {
  if (t.is_leaf()) {
    if (!t.block.is_trivial()) throw std::invalid_argument("assemble: leaf with nontrivial block");
    throw std::logic_error("assemble_into: leaf reached");  // handled by caller
  }
  const RootedMap& b = t.block;
  if (static_cast<int>(t.children.size()) != b.num_darts)
    throw std::invalid_argument("assemble: degree/block mismatch");
  if (!is_two_connected(b)) throw std::invalid_argument("assemble: block not 2-connected");
  const int offset = mb.append(b);
  const auto a_list = corner_order(b);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    const BlockTreeNode& child = t.children[i];
    if (child.is_leaf()) {
      if (!child.block.is_trivial())
        throw std::invalid_argument("assemble: leaf with nontrivial block");
      continue;
    }
    const int sub_root = assemble_into(child, mb);
    // Splice the child's whole rotation at its root tail into the corner
    // after a_i, so the child's root edge follows a_i counterclockwise.
    const int a = a_list[i] + offset;
    int last = sub_root;
    while (mb.next[last] != sub_root) last = mb.next[last];
    mb.next[last] = mb.next[a];
    mb.next[a] = sub_root;
  }
  return b.root + offset;
}

}  // namespace detail

// Inverse of block_tree: rebuilds the unique map whose block tree matches t.
// Output is canonical.
inline RootedMap assemble(const BlockTreeNode& t) {
  if (t.is_leaf()) {
    if (!t.block.is_trivial()) throw std::invalid_argument("assemble: leaf with nontrivial block");
    return trivial_map();
  }
  detail::MapBuilder mb;
  const int root = detail::assemble_into(t, mb);
  RootedMap m;
  m.num_darts = static_cast<int>(mb.twin.size());
  m.twin = std::move(mb.twin);
  m.next = std::move(mb.next);
  m.root = root;
  return canonicalize(m);
}

}  // namespace mapblocks
