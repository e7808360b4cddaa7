#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "mapblocks/blocks.hpp"

using namespace mapblocks;

namespace {

// Brute-force separability oracle straight from the definition: some split of
// the edge set into two nonempty parts shares exactly one incident vertex.
bool brute_force_two_connected(const RootedMap& m) {
  if (m.is_trivial() || m.edges() == 1) return true;
  const auto vid = dart_vertices(m);
  std::vector<std::pair<int, int>> ends;  // per edge
  for (int d = 0; d < m.num_darts; ++d)
    if (d < m.twin[d]) ends.push_back({vid[d], vid[m.twin[d]]});
  const int e = static_cast<int>(ends.size());
  for (unsigned mask = 1; mask + 1 < (1u << e); ++mask) {
    std::set<int> a, b;
    for (int i = 0; i < e; ++i) {
      auto& side = (mask >> i) & 1 ? a : b;
      side.insert(ends[i].first);
      side.insert(ends[i].second);
    }
    int shared = 0;
    for (int v : a) shared += b.count(v);
    if (shared == 1) return false;
  }
  return true;
}

RootedMap triangle() {
  // u:(0 5) v:(1 2) w:(3 4), twin (0 1)(2 3)(4 5)
  return {6, {1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, 0};
}

}  // namespace

TEST_CASE("two-connectivity on the basic zoo", "[blocks]") {
  REQUIRE(is_two_connected(one_edge_loop()));  // both one-edge maps count
  REQUIRE(is_two_connected(one_edge_link()));
  REQUIRE(is_two_connected(trivial_map()));
  REQUIRE(is_two_connected(fixtures::parallel_pair()));
  REQUIRE(is_two_connected(triangle()));
  REQUIRE_FALSE(is_two_connected(fixtures::lollipop()));
  REQUIRE_FALSE(is_two_connected(fixtures::seven_edge()));
}

TEST_CASE("two-connectivity agrees with the brute-force definition", "[blocks]") {
  for (const auto& m : {one_edge_loop(), one_edge_link(), fixtures::lollipop(),
                        fixtures::parallel_pair(), triangle(), fixtures::seven_edge()}) {
    REQUIRE(is_two_connected(m) == brute_force_two_connected(m));
  }
}

TEST_CASE("block decomposition of the fixtures", "[blocks]") {
  const auto lolli = blocks(fixtures::lollipop());
  REQUIRE(lolli.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  REQUIRE(lolli.cut_vertices == std::vector<int>{0});

  const auto seven = blocks(fixtures::seven_edge());
  REQUIRE(seven.blocks ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}, {6, 7}, {8, 9}, {10, 11, 12, 13}});
  REQUIRE(seven.cut_vertices == std::vector<int>{1, 2, 3});

  const auto tri = blocks(triangle());
  REQUIRE(tri.blocks.size() == 1);
  REQUIRE(tri.cut_vertices.empty());

  // path of two edges: two one-edge blocks, one cut vertex
  // u:(0), v:(1 2), w:(3); twin (0 1)(2 3)
  const RootedMap path{4, {1, 0, 3, 2}, {0, 2, 1, 3}, 0};
  REQUIRE(validate(path).empty());
  const auto p = blocks(path);
  REQUIRE(p.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  REQUIRE(p.cut_vertices.size() == 1);

  REQUIRE_THROWS_AS(blocks(trivial_map()), std::invalid_argument);
}

TEST_CASE("blocks partition the darts and pass two-connectivity", "[blocks]") {
  for (const auto& m : {fixtures::lollipop(), fixtures::seven_edge(), triangle()}) {
    const auto dec = blocks(m);
    std::vector<char> hit(m.num_darts, 0);
    for (const auto& b : dec.blocks)
      for (int d : b) {
        REQUIRE(!hit[d]);
        hit[d] = 1;
      }
    for (int d = 0; d < m.num_darts; ++d) REQUIRE(hit[d]);
    // every block is closed under twin
    for (const auto& b : dec.blocks) {
      std::set<int> s(b.begin(), b.end());
      for (int d : b) REQUIRE(s.count(m.twin[d]) == 1);
    }
  }
}
