#pragma once

#include <stdexcept>

#include "mapblocks/block_tree.hpp"
#include "mapblocks/gw_sampler.hpp"
#include "mapblocks/oracle.hpp"

namespace mapblocks {

inline constexpr int kFullMapCap = 6;

// Uniform random rooted map with n edges: sample the block tree shape via the
// conditioned offspring sequence, dress each node of outdegree 2k with a
// uniform 2-connected map with k edges from the exhaustive cache, assemble.
// Capped at n <= 6 by the cache (block contents are only needed here; block
// sizes alone have no cap).
inline RootedMap sample_map(int n, Xoshiro256pp& rng, int cap = kFullMapCap) {
  if (n < 0 || n > cap || cap > kFullMapCap)
    throw std::invalid_argument("sample_map: block enumeration cap exceeded");
  if (n == 0) return trivial_map();
  const DegreeSequence seq = sample_conditioned(n, rng);
  const OrderedTree tree = tree_from_degrees(seq, cycle_shift(seq));
  std::size_t pos = 0;
  auto build = [&](auto&& self) -> BlockTreeNode {
    const int d = tree.outdeg[pos++];
    BlockTreeNode node;
    if (d == 0) {
      node.block = trivial_map();
      return node;
    }
    const auto& pool = two_connected_maps(d / 2);
    node.block = pool[rng.below(pool.size())];
    node.children.reserve(d);
    for (int i = 0; i < d; ++i) node.children.push_back(self(self));
    return node;
  };
  const BlockTreeNode t = build(build);
  return assemble(t);
}

}  // namespace mapblocks
