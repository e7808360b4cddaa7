#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mapblocks {

// A rooted combinatorial planar map as a rotation system on darts.
//   twin : fixed-point-free involution pairing the two darts of each edge
//   next : counterclockwise successor around the dart's tail vertex
// Vertices are the orbits of next, faces the orbits of next o twin.
// The trivial map (one vertex, no edges) is num_darts == 0, root == -1.
struct RootedMap {
  int num_darts = 0;
  std::vector<int> twin;
  std::vector<int> next;
  int root = -1;

  bool is_trivial() const { return num_darts == 0; }
  int edges() const { return num_darts / 2; }

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
  friend auto operator<=>(const RootedMap&, const RootedMap&) = default;
};

inline RootedMap trivial_map() { return {}; }

inline RootedMap one_edge_loop() { return {2, {1, 0}, {1, 0}, 0}; }

inline RootedMap one_edge_link() { return {2, {1, 0}, {0, 1}, 0}; }

// dart -> vertex id; ids are assigned in order of each orbit's smallest dart.
inline std::vector<int> dart_vertices(const RootedMap& m, int* vertex_count = nullptr) {
  std::vector<int> vid(m.num_darts, -1);
  int nv = 0;
  for (int d = 0; d < m.num_darts; ++d) {
    if (vid[d] >= 0) continue;
    for (int e = d; vid[e] < 0; e = m.next[e]) vid[e] = nv;
    ++nv;
  }
  if (vertex_count) *vertex_count = nv;
  return vid;
}

inline int vertex_count(const RootedMap& m) {
  if (m.is_trivial()) return 1;
  int nv = 0;
  dart_vertices(m, &nv);
  return nv;
}

inline int face_count(const RootedMap& m) {
  if (m.is_trivial()) return 1;
  std::vector<char> seen(m.num_darts, 0);
  int nf = 0;
  for (int d = 0; d < m.num_darts; ++d) {
    if (seen[d]) continue;
    for (int e = d; !seen[e]; e = m.next[m.twin[e]]) seen[e] = 1;
    ++nf;
  }
  return nf;
}

// All invariant checks; empty result means the map is valid.
inline std::vector<std::string> validate(const RootedMap& m) {
  std::vector<std::string> bad;
  if (m.is_trivial()) {
    if (!m.twin.empty() || !m.next.empty()) bad.push_back("trivial map carries darts");
    if (m.root != -1) bad.push_back("trivial map has a root");
    return bad;
  }
  if (m.num_darts < 0 || m.num_darts % 2 != 0) bad.push_back("num_darts not even");
  if (static_cast<int>(m.twin.size()) != m.num_darts ||
      static_cast<int>(m.next.size()) != m.num_darts) {
    bad.push_back("twin/next size mismatch");
    return bad;
  }
  if (m.root < 0 || m.root >= m.num_darts) bad.push_back("root out of range");
  for (int d = 0; d < m.num_darts; ++d) {
    if (m.twin[d] < 0 || m.twin[d] >= m.num_darts || m.twin[m.twin[d]] != d) {
      bad.push_back("twin not an involution");
      break;
    }
  }
  for (int d = 0; d < m.num_darts; ++d) {
    if (m.twin[d] == d) {
      bad.push_back("twin not fixed-point-free");
      break;
    }
  }
  {
    std::vector<char> hit(m.num_darts, 0);
    bool ok = true;
    for (int d = 0; d < m.num_darts && ok; ++d) {
      if (m.next[d] < 0 || m.next[d] >= m.num_darts || hit[m.next[d]])
        ok = false;
      else
        hit[m.next[d]] = 1;
    }
    if (!ok) {
      bad.push_back("next not a permutation");
      return bad;
    }
  }
  // connectivity under <twin, next>
  {
    std::vector<char> seen(m.num_darts, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      const int d = stack.back();
      stack.pop_back();
      ++cnt;
      for (int e : {m.twin[d], m.next[d]}) {
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
      }
    }
    if (cnt != m.num_darts) bad.push_back("not connected");
  }
  if (bad.empty()) {
    const int v = vertex_count(m), f = face_count(m), e = m.edges();
    if (v - e + f != 2) bad.push_back("Euler characteristic not 2 (genus > 0)");
  }
  return bad;
}

}  // namespace mapblocks
