#pragma once

#include "mapblocks/rooted_map.hpp"

namespace mapblocks::fixtures {

// Loop at u plus a pendant edge u-w, rooted on the loop; the pendant hangs in
// the corner between the two loop darts. Darts: 0,1 loop; 2 = u->w, 3 = w->u.
// Rotation at u: (0 2 1), at w: (3).
inline RootedMap lollipop() { return {4, {1, 0, 3, 2}, {2, 0, 1, 3}, 0}; }

// Two parallel edges u-v. Darts 0,2 at u; 1,3 at v; rotations (0 2) and (1 3).
inline RootedMap parallel_pair() { return {4, {1, 0, 3, 2}, {2, 3, 0, 1}, 0}; }

// Seven-edge map exercising every decomposition feature at once: a triangle
// u-v-w (root block), a loop at v, a bridge w-x, and a parallel pair x-y.
//   darts: 0/1 u-v (root), 2/3 v-w, 4/5 w-u, 6/7 loop at v, 8/9 w-x,
//          10/11 and 12/13 the two x-y copies
//   rotations: u:(0 5)  v:(1 6 7 2)  w:(3 8 4)  x:(9 10 12)  y:(11 13)
inline RootedMap seven_edge() {
  RootedMap m;
  m.num_darts = 14;
  m.twin = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12};
  m.next = {5, 6, 1, 8, 3, 0, 7, 2, 4, 10, 12, 13, 9, 11};
  m.root = 0;
  return m;
}

}  // namespace mapblocks::fixtures
