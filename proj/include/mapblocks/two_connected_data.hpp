#pragma once

// Generated by tools/gen_two_connected.cpp; do not edit by hand.
// All 2-connected rooted maps with 4..6 edges, canonical forms in sorted
// order. Table sizes equal the closed-form counts (6, 22, 91), which
// certifies exhaustiveness.

#include <vector>

#include "mapblocks/rooted_map.hpp"

namespace mapblocks::detail {

inline const std::vector<RootedMap>& two_connected_table_4() {
  static const std::vector<RootedMap> v = {
      {8, {2,4,0,6,1,7,3,5}, {1,0,3,2,5,4,7,6}, 0},
      {8, {2,5,0,7,6,1,4,3}, {1,0,3,4,2,6,7,5}, 0},
      {8, {3,5,6,0,7,1,2,4}, {1,2,0,4,5,3,7,6}, 0},
      {8, {3,5,7,0,6,1,4,2}, {1,2,0,4,3,6,7,5}, 0},
      {8, {3,6,4,0,2,7,1,5}, {1,2,0,4,5,3,7,6}, 0},
      {8, {4,7,6,5,0,3,2,1}, {1,2,3,0,5,6,7,4}, 0},
  };
  return v;
}

inline const std::vector<RootedMap>& two_connected_table_5() {
  static const std::vector<RootedMap> v = {
      {10, {2,4,0,6,1,8,3,9,5,7}, {1,0,3,2,5,4,7,6,9,8}, 0},
      {10, {2,4,0,7,1,9,8,3,6,5}, {1,0,3,2,5,6,4,8,9,7}, 0},
      {10, {2,5,0,7,8,1,9,3,4,6}, {1,0,3,4,2,6,7,5,9,8}, 0},
      {10, {2,5,0,7,9,1,8,3,6,4}, {1,0,3,4,2,6,5,8,9,7}, 0},
      {10, {2,5,0,8,6,1,4,9,3,7}, {1,0,3,4,2,6,7,5,9,8}, 0},
      {10, {2,6,0,9,8,7,1,5,4,3}, {1,0,3,4,5,2,7,8,9,6}, 0},
      {10, {3,5,6,0,8,1,2,9,4,7}, {1,2,0,4,5,3,7,6,9,8}, 0},
      {10, {3,5,7,0,8,1,9,2,4,6}, {1,2,0,4,3,6,7,5,9,8}, 0},
      {10, {3,5,7,0,9,1,8,2,6,4}, {1,2,0,4,3,6,5,8,9,7}, 0},
      {10, {3,5,8,0,6,1,4,9,2,7}, {1,2,0,4,3,6,7,5,9,8}, 0},
      {10, {3,6,4,0,2,8,1,9,5,7}, {1,2,0,4,5,3,7,6,9,8}, 0},
      {10, {3,6,7,0,9,8,1,2,5,4}, {1,2,0,4,5,6,3,8,9,7}, 0},
      {10, {3,6,8,0,9,7,1,5,2,4}, {1,2,0,4,5,3,7,6,9,8}, 0},
      {10, {3,6,9,0,8,7,1,5,4,2}, {1,2,0,4,5,3,7,8,9,6}, 0},
      {10, {3,7,4,0,2,9,8,1,6,5}, {1,2,0,4,5,6,3,8,9,7}, 0},
      {10, {4,6,7,9,0,8,1,2,5,3}, {1,2,3,0,5,6,4,8,9,7}, 0},
      {10, {4,6,9,8,0,7,1,5,3,2}, {1,2,3,0,5,4,7,8,9,6}, 0},
      {10, {4,7,6,8,0,9,2,1,3,5}, {1,2,3,0,5,6,7,4,9,8}, 0},
      {10, {4,7,8,5,0,3,9,1,2,6}, {1,2,3,0,5,6,7,4,9,8}, 0},
      {10, {4,7,9,5,0,3,8,1,6,2}, {1,2,3,0,5,6,4,8,9,7}, 0},
      {10, {4,8,6,5,0,3,2,9,1,7}, {1,2,3,0,5,6,7,4,9,8}, 0},
      {10, {5,9,8,7,6,0,4,3,2,1}, {1,2,3,4,0,6,7,8,9,5}, 0},
  };
  return v;
}

inline const std::vector<RootedMap>& two_connected_table_6() {
  static const std::vector<RootedMap> v = {
      {12, {2,4,0,6,1,8,3,10,5,11,7,9}, {1,0,3,2,5,4,7,6,9,8,11,10}, 0},
      {12, {2,4,0,6,1,9,3,11,10,5,8,7}, {1,0,3,2,5,4,7,8,6,10,11,9}, 0},
      {12, {2,4,0,7,1,9,10,3,11,5,6,8}, {1,0,3,2,5,6,4,8,9,7,11,10}, 0},
      {12, {2,4,0,7,1,9,11,3,10,5,8,6}, {1,0,3,2,5,6,4,8,7,10,11,9}, 0},
      {12, {2,4,0,7,1,10,8,3,6,11,5,9}, {1,0,3,2,5,6,4,8,9,7,11,10}, 0},
      {12, {2,4,0,8,1,11,10,9,3,7,6,5}, {1,0,3,2,5,6,7,4,9,10,11,8}, 0},
      {12, {2,5,0,7,8,1,10,3,4,11,6,9}, {1,0,3,4,2,6,7,5,9,8,11,10}, 0},
      {12, {2,5,0,7,9,1,10,3,11,4,6,8}, {1,0,3,4,2,6,5,8,9,7,11,10}, 0},
      {12, {2,5,0,7,9,1,11,3,10,4,8,6}, {1,0,3,4,2,6,5,8,7,10,11,9}, 0},
      {12, {2,5,0,7,10,1,8,3,6,11,4,9}, {1,0,3,4,2,6,5,8,9,7,11,10}, 0},
      {12, {2,5,0,8,6,1,4,10,3,11,7,9}, {1,0,3,4,2,6,7,5,9,8,11,10}, 0},
      {12, {2,5,0,8,9,1,11,10,3,4,7,6}, {1,0,3,4,2,6,7,8,5,10,11,9}, 0},
      {12, {2,5,0,8,10,1,11,9,3,7,4,6}, {1,0,3,4,2,6,7,5,9,8,11,10}, 0},
      {12, {2,5,0,8,11,1,10,9,3,7,6,4}, {1,0,3,4,2,6,7,5,9,10,11,8}, 0},
      {12, {2,5,0,9,6,1,4,11,10,3,8,7}, {1,0,3,4,2,6,7,8,5,10,11,9}, 0},
      {12, {2,6,0,8,9,11,1,10,3,4,7,5}, {1,0,3,4,5,2,7,8,6,10,11,9}, 0},
      {12, {2,6,0,8,11,10,1,9,3,7,5,4}, {1,0,3,4,5,2,7,6,9,10,11,8}, 0},
      {12, {2,6,0,9,8,10,1,11,4,3,5,7}, {1,0,3,4,5,2,7,8,9,6,11,10}, 0},
      {12, {2,6,0,9,10,7,1,5,11,3,4,8}, {1,0,3,4,5,2,7,8,9,6,11,10}, 0},
      {12, {2,6,0,9,11,7,1,5,10,3,8,4}, {1,0,3,4,5,2,7,8,6,10,11,9}, 0},
      {12, {2,6,0,10,8,7,1,5,4,11,3,9}, {1,0,3,4,5,2,7,8,9,6,11,10}, 0},
      {12, {2,7,0,11,10,9,8,1,6,5,4,3}, {1,0,3,4,5,6,2,8,9,10,11,7}, 0},
      {12, {3,5,6,0,8,1,2,10,4,11,7,9}, {1,2,0,4,5,3,7,6,9,8,11,10}, 0},
      {12, {3,5,6,0,9,1,2,11,10,4,8,7}, {1,2,0,4,5,3,7,8,6,10,11,9}, 0},
      {12, {3,5,7,0,8,1,10,2,4,11,6,9}, {1,2,0,4,3,6,7,5,9,8,11,10}, 0},
      {12, {3,5,7,0,9,1,10,2,11,4,6,8}, {1,2,0,4,3,6,5,8,9,7,11,10}, 0},
      {12, {3,5,7,0,9,1,11,2,10,4,8,6}, {1,2,0,4,3,6,5,8,7,10,11,9}, 0},
      {12, {3,5,7,0,10,1,8,2,6,11,4,9}, {1,2,0,4,3,6,5,8,9,7,11,10}, 0},
      {12, {3,5,8,0,6,1,4,10,2,11,7,9}, {1,2,0,4,3,6,7,5,9,8,11,10}, 0},
      {12, {3,5,8,0,9,1,11,10,2,4,7,6}, {1,2,0,4,3,6,7,8,5,10,11,9}, 0},
      {12, {3,5,8,0,10,1,11,9,2,7,4,6}, {1,2,0,4,3,6,7,5,9,8,11,10}, 0},
      {12, {3,5,8,0,11,1,10,9,2,7,6,4}, {1,2,0,4,3,6,7,5,9,10,11,8}, 0},
      {12, {3,5,9,0,6,1,4,11,10,2,8,7}, {1,2,0,4,3,6,7,8,5,10,11,9}, 0},
      {12, {3,6,4,0,2,8,1,10,5,11,7,9}, {1,2,0,4,5,3,7,6,9,8,11,10}, 0},
      {12, {3,6,4,0,2,9,1,11,10,5,8,7}, {1,2,0,4,5,3,7,8,6,10,11,9}, 0},
      {12, {3,6,7,0,9,10,1,2,11,4,5,8}, {1,2,0,4,5,6,3,8,9,7,11,10}, 0},
      {12, {3,6,7,0,9,11,1,2,10,4,8,5}, {1,2,0,4,5,6,3,8,7,10,11,9}, 0},
      {12, {3,6,7,0,10,8,1,2,5,11,4,9}, {1,2,0,4,5,6,3,8,9,7,11,10}, 0},
      {12, {3,6,8,0,9,10,1,11,2,4,5,7}, {1,2,0,4,5,3,7,6,9,8,11,10}, 0},
      {12, {3,6,8,0,9,11,1,10,2,4,7,5}, {1,2,0,4,5,3,7,8,6,10,11,9}, 0},
      {12, {3,6,8,0,10,7,1,5,2,11,4,9}, {1,2,0,4,5,3,7,6,9,8,11,10}, 0},
      {12, {3,6,8,0,11,10,1,9,2,7,5,4}, {1,2,0,4,5,3,7,6,9,10,11,8}, 0},
      {12, {3,6,9,0,8,10,1,11,4,2,5,7}, {1,2,0,4,5,3,7,8,9,6,11,10}, 0},
      {12, {3,6,9,0,10,7,1,5,11,2,4,8}, {1,2,0,4,5,3,7,8,9,6,11,10}, 0},
      {12, {3,6,9,0,11,7,1,5,10,2,8,4}, {1,2,0,4,5,3,7,8,6,10,11,9}, 0},
      {12, {3,6,10,0,8,7,1,5,4,11,2,9}, {1,2,0,4,5,3,7,8,9,6,11,10}, 0},
      {12, {3,7,4,0,2,9,10,1,11,5,6,8}, {1,2,0,4,5,6,3,8,9,7,11,10}, 0},
      {12, {3,7,4,0,2,9,11,1,10,5,8,6}, {1,2,0,4,5,6,3,8,7,10,11,9}, 0},
      {12, {3,7,4,0,2,10,8,1,6,11,5,9}, {1,2,0,4,5,6,3,8,9,7,11,10}, 0},
      {12, {3,7,8,0,11,10,9,1,2,6,5,4}, {1,2,0,4,5,6,7,3,9,10,11,8}, 0},
      {12, {3,7,9,0,11,10,8,1,6,2,5,4}, {1,2,0,4,5,6,3,8,7,10,11,9}, 0},
      {12, {3,7,10,0,11,9,8,1,6,5,2,4}, {1,2,0,4,5,6,3,8,9,7,11,10}, 0},
      {12, {3,7,11,0,10,9,8,1,6,5,4,2}, {1,2,0,4,5,6,3,8,9,10,11,7}, 0},
      {12, {3,8,4,0,2,11,10,9,1,7,6,5}, {1,2,0,4,5,6,7,3,9,10,11,8}, 0},
      {12, {4,6,7,9,0,10,1,2,11,3,5,8}, {1,2,3,0,5,6,4,8,9,7,11,10}, 0},
      {12, {4,6,7,9,0,11,1,2,10,3,8,5}, {1,2,3,0,5,6,4,8,7,10,11,9}, 0},
      {12, {4,6,7,10,0,8,1,2,5,11,3,9}, {1,2,3,0,5,6,4,8,9,7,11,10}, 0},
      {12, {4,6,8,9,0,11,1,10,2,3,7,5}, {1,2,3,0,5,4,7,8,6,10,11,9}, 0},
      {12, {4,6,8,11,0,10,1,9,2,7,5,3}, {1,2,3,0,5,4,7,6,9,10,11,8}, 0},
      {12, {4,6,9,8,0,10,1,11,3,2,5,7}, {1,2,3,0,5,4,7,8,9,6,11,10}, 0},
      {12, {4,6,9,10,0,7,1,5,11,2,3,8}, {1,2,3,0,5,4,7,8,9,6,11,10}, 0},
      {12, {4,6,9,11,0,7,1,5,10,2,8,3}, {1,2,3,0,5,4,7,8,6,10,11,9}, 0},
      {12, {4,6,10,8,0,7,1,5,3,11,2,9}, {1,2,3,0,5,4,7,8,9,6,11,10}, 0},
      {12, {4,7,6,8,0,10,2,1,3,11,5,9}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,7,8,5,0,3,10,1,2,11,6,9}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,7,8,10,0,11,9,1,2,6,3,5}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,7,8,11,0,10,9,1,2,6,5,3}, {1,2,3,0,5,6,7,4,9,10,11,8}, 0},
      {12, {4,7,9,5,0,3,10,1,11,2,6,8}, {1,2,3,0,5,6,4,8,9,7,11,10}, 0},
      {12, {4,7,9,5,0,3,11,1,10,2,8,6}, {1,2,3,0,5,6,4,8,7,10,11,9}, 0},
      {12, {4,7,9,10,0,11,8,1,6,2,3,5}, {1,2,3,0,5,6,4,8,9,7,11,10}, 0},
      {12, {4,7,9,11,0,10,8,1,6,2,5,3}, {1,2,3,0,5,6,4,8,7,10,11,9}, 0},
      {12, {4,7,10,5,0,3,8,1,6,11,2,9}, {1,2,3,0,5,6,4,8,9,7,11,10}, 0},
      {12, {4,7,11,10,0,9,8,1,6,5,3,2}, {1,2,3,0,5,6,4,8,9,10,11,7}, 0},
      {12, {4,8,6,5,0,3,2,10,1,11,7,9}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,8,6,10,0,11,2,9,1,7,3,5}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,8,7,9,0,11,10,2,1,3,6,5}, {1,2,3,0,5,6,7,8,4,10,11,9}, 0},
      {12, {4,8,9,5,0,3,11,10,1,2,7,6}, {1,2,3,0,5,6,7,8,4,10,11,9}, 0},
      {12, {4,8,10,5,0,3,11,9,1,7,2,6}, {1,2,3,0,5,6,7,4,9,8,11,10}, 0},
      {12, {4,8,11,5,0,3,10,9,1,7,6,2}, {1,2,3,0,5,6,7,4,9,10,11,8}, 0},
      {12, {4,9,6,5,0,3,2,11,10,1,8,7}, {1,2,3,0,5,6,7,8,4,10,11,9}, 0},
      {12, {5,7,8,11,10,0,9,1,2,6,4,3}, {1,2,3,4,0,6,7,5,9,10,11,8}, 0},
      {12, {5,7,11,10,9,0,8,1,6,4,3,2}, {1,2,3,4,0,6,5,8,9,10,11,7}, 0},
      {12, {5,8,7,9,11,0,10,2,1,3,6,4}, {1,2,3,4,0,6,7,8,5,10,11,9}, 0},
      {12, {5,8,9,11,6,0,4,10,1,2,7,3}, {1,2,3,4,0,6,7,8,5,10,11,9}, 0},
      {12, {5,8,11,10,6,0,4,9,1,7,3,2}, {1,2,3,4,0,6,7,5,9,10,11,8}, 0},
      {12, {5,9,8,7,10,0,11,3,2,1,4,6}, {1,2,3,4,0,6,7,8,9,5,11,10}, 0},
      {12, {5,9,8,10,6,0,4,11,2,1,3,7}, {1,2,3,4,0,6,7,8,9,5,11,10}, 0},
      {12, {5,9,10,7,6,0,4,3,11,1,2,8}, {1,2,3,4,0,6,7,8,9,5,11,10}, 0},
      {12, {5,9,11,7,6,0,4,3,10,1,8,2}, {1,2,3,4,0,6,7,8,5,10,11,9}, 0},
      {12, {5,10,8,7,6,0,4,3,2,11,1,9}, {1,2,3,4,0,6,7,8,9,5,11,10}, 0},
      {12, {6,11,10,9,8,7,0,5,4,3,2,1}, {1,2,3,4,5,0,7,8,9,10,11,6}, 0},
  };
  return v;
}

inline const std::vector<RootedMap>& two_connected_table(long k) {
  switch (k) {
    case 4: return two_connected_table_4();
    case 5: return two_connected_table_5();
    case 6: return two_connected_table_6();
    default: throw std::invalid_argument("two_connected_table: k must be 4..6");
  }
}

}  // namespace mapblocks::detail
