#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "mapblocks/block_tree.hpp"
#include "mapblocks/counting.hpp"
#include "mapblocks/offspring.hpp"
#include "mapblocks/rooted_map.hpp"
#include "mapblocks/traversal.hpp"

namespace mapblocks {

inline constexpr long kTreeEnumCap = 6;
inline constexpr long kMapEnumCap = 3;

// All ordered trees with 2n edges and even outdegrees, as preorder outdegree
// sequences (length 2n+1, sum 2n, prefix walk stays positive before the end).
inline std::vector<std::vector<int>> enum_even_trees(long n) {
  if (n < 1 || n > kTreeEnumCap) throw std::invalid_argument("enum_even_trees: need 1 <= n <= 6");
  const int nodes = static_cast<int>(2 * n + 1);
  std::vector<std::vector<int>> out;
  std::vector<int> seq(nodes);
  // walk = pending subtree slots before node i; starts at 1, each node
  // consumes one slot and opens outdeg new ones, reaches 0 exactly at the end.
  auto rec = [&](auto&& self, int i, int walk, int sum) -> void {
    if (i == nodes) {
      if (walk == 0) out.push_back(seq);
      return;
    }
    const int after = nodes - i - 1;
    for (int d = 0; d + sum <= 2 * n; d += 2) {
      const int w = walk + d - 1;
      if (after == 0 ? (w != 0) : (w < 1 || w > after)) continue;
      seq[i] = d;
      self(self, i + 1, w, sum + d);
    }
  };
  rec(rec, 0, 1, 0);
  return out;
}

// Independent count of the same trees by dynamic programming:
// f(N) = #even-outdegree ordered trees with N nodes.
inline BigInt count_even_trees(long n) {
  const int N = static_cast<int>(2 * n + 1);
  std::vector<BigInt> f(N + 1, 0);
  f[1] = 1;
  for (int nodes = 3; nodes <= N; nodes += 2) {
    // g_k(s) = #forests of k trees totalling s nodes
    std::vector<BigInt> g(nodes, 0);
    g[0] = 1;  // zero trees, zero nodes
    BigInt total = 0;
    std::vector<BigInt> cur = g;
    for (int k = 1; k <= nodes - 1; ++k) {
      std::vector<BigInt> nxt(nodes, 0);
      for (int s = 0; s < nodes; ++s) {
        if (cur[s] == 0) continue;
        for (int t = 1; s + t < nodes; t += 2) nxt[s + t] += cur[s] * f[t];
      }
      cur = nxt;
      if (k % 2 == 0) total += cur[nodes - 1];
    }
    f[nodes] = total;
  }
  return f[N];
}

// m(t) = prod over nodes of C_{outdeg/2}.
inline BigInt tree_weight(const std::vector<int>& outdeg) {
  BigInt w = 1;
  for (int d : outdeg) {
    if (d % 2 != 0) throw std::invalid_argument("tree_weight: odd outdegree");
    w *= count_two_connected(d / 2);
  }
  return w;
}

inline bool weight_sum_check(long n) {
  const auto trees = enum_even_trees(n);
  BigInt s = 0;
  for (const auto& t : trees) s += tree_weight(t);
  return s == count_maps(n);
}

// Exact law with rational probabilities.
template <typename Value>
using ExactLaw = std::map<Value, Rational>;

// Positions of the k-th largest block size (halved outdegrees): exact law of
// that statistic under P(t) proportional to m(t); k beyond the block count
// contributes 0.
inline ExactLaw<int> exact_block_law(long n, int k) {
  if (k < 1) throw std::invalid_argument("exact_block_law: k >= 1");
  const auto trees = enum_even_trees(n);
  const Rational total(count_maps(n));
  ExactLaw<int> law;
  for (const auto& t : trees) {
    std::vector<int> sizes;
    for (int d : t)
      if (d > 0) sizes.push_back(d / 2);
    std::sort(sizes.rbegin(), sizes.rend());
    const int value = k <= static_cast<int>(sizes.size()) ? sizes[k - 1] : 0;
    law[value] += Rational(tree_weight(t)) / total;
  }
  return law;
}

// Exact law of the full descending block-size vector.
inline ExactLaw<std::vector<int>> exact_block_sizes_law(long n) {
  const auto trees = enum_even_trees(n);
  const Rational total(count_maps(n));
  ExactLaw<std::vector<int>> law;
  for (const auto& t : trees) {
    std::vector<int> sizes;
    for (int d : t)
      if (d > 0) sizes.push_back(d / 2);
    std::sort(sizes.rbegin(), sizes.rend());
    law[sizes] += Rational(tree_weight(t)) / total;
  }
  return law;
}

// Exact conditional law of the iid offspring vector given its sum: values are
// even sequences of length 2n+1 summing to 2n, probability proportional to
// the product of pmf values.
inline ExactLaw<std::vector<int>> exact_sequence_law(long n) {
  if (n < 1 || n > 3) throw std::invalid_argument("exact_sequence_law: need 1 <= n <= 3");
  const int len = static_cast<int>(2 * n + 1);
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur(len);
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == len) {
      if (sum == 2 * n) seqs.push_back(cur);
      return;
    }
    for (int v = 0; sum + v <= 2 * n; v += 2) {
      cur[i] = v;
      self(self, i + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  ExactLaw<std::vector<int>> law;
  Rational total = 0;
  for (const auto& s : seqs) {
    Rational w = 1;
    for (int v : s) w *= mu_pmf(v / 2);
    law[s] = w;
    total += w;
  }
  for (auto& [k, v] : law) v /= total;
  return law;
}

namespace detail {

// All connected genus-0 rotation systems on 2n darts with twin fixed to
// (0 1)(2 3)... and root 0, deduplicated by canonical form. Every rooted map
// has such a representative, so this enumerates rooted maps exactly once.
inline std::vector<RootedMap> enumerate_rotation_systems(long n) {
  const int nd = static_cast<int>(2 * n);
  std::vector<int> twin(nd);
  for (int d = 0; d < nd; ++d) twin[d] = d ^ 1;
  std::vector<int> perm(nd);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<RootedMap> seen;
  RootedMap m;
  m.num_darts = nd;
  m.twin = twin;
  m.root = 0;
  do {
    m.next = perm;
    // connectivity under <twin, next>
    std::vector<char> vis(nd, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      ++cnt;
      if (!vis[m.twin[d]]) {
        vis[m.twin[d]] = 1;
        stack.push_back(m.twin[d]);
      }
      if (!vis[m.next[d]]) {
        vis[m.next[d]] = 1;
        stack.push_back(m.next[d]);
      }
    }
    if (cnt != nd) continue;
    if (vertex_count(m) - n + face_count(m) != 2) continue;
    seen.insert(canonicalize(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Exhaustive list of rooted maps with n edges, canonical forms in sorted order.
inline std::vector<RootedMap> enum_maps(long n) {
  if (n < 0 || n > kMapEnumCap) throw std::invalid_argument("enum_maps: need 0 <= n <= 3");
  if (n == 0) return {trivial_map()};
  return detail::enumerate_rotation_systems(n);
}

// Groups the enumerated maps by block-tree shape and verifies the counts
// against the tree weights; additionally checks that the block assignments
// within a group are pairwise distinct tuples of 2-connected maps (so each
// group realizes its full product set).
inline bool verify_prop1(long n) {
  const auto maps = enum_maps(n);
  if (BigInt(static_cast<long>(maps.size())) != count_maps(n)) return false;
  std::map<std::vector<int>, std::set<std::vector<RootedMap>>> groups;
  for (const auto& m : maps) {
    const auto t = block_tree(m);
    std::vector<RootedMap> assignment;
    auto collect = [&](auto&& self, const BlockTreeNode& node) -> void {
      assignment.push_back(node.block);
      for (const auto& c : node.children) self(self, c);
    };
    collect(collect, t);
    if (!groups[tree_shape(t)].insert(assignment).second) return false;  // duplicate
  }
  const auto trees = enum_even_trees(n);
  if (groups.size() != trees.size()) return false;
  for (const auto& t : trees) {
    const auto it = groups.find(t);
    if (it == groups.end()) return false;
    if (BigInt(static_cast<long>(it->second.size())) != tree_weight(t)) return false;
    for (const auto& assignment : it->second)
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& b = assignment[i];
        if (b.edges() != t[i] / 2) return false;
        if (!is_two_connected(b)) return false;
      }
  }
  return true;
}

// All 2-connected rooted maps with k edges, canonical, sorted. k <= 3 comes
// from live enumeration; 4..6 from the generated table (validated in tests
// against the counts C_k, which certifies exhaustiveness).
const std::vector<RootedMap>& two_connected_maps(long k);

}  // namespace mapblocks

#include "mapblocks/two_connected_data.hpp"

namespace mapblocks {

inline const std::vector<RootedMap>& two_connected_maps(long k) {
  if (k < 0 || k > 6) throw std::invalid_argument("two_connected_maps: need 0 <= k <= 6");
  static const std::vector<std::vector<RootedMap>> cache = [] {
    std::vector<std::vector<RootedMap>> c(7);
    c[0] = {trivial_map()};
    for (long j = 1; j <= 3; ++j) {
      for (const auto& m : enum_maps(j))
        if (is_two_connected(m)) c[j].push_back(m);
    }
    for (long j = 4; j <= 6; ++j) c[j] = detail::two_connected_table(j);
    return c;
  }();
  return cache[k];
}

}  // namespace mapblocks
