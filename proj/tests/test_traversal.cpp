#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "mapblocks/traversal.hpp"

using namespace mapblocks;

TEST_CASE("one-edge maps", "[traversal]") {
  const auto link = bfs_data(one_edge_link());
  REQUIRE(link.ordering.order == std::vector<int>{0, 1});  // tail(rho), head(rho)
  REQUIRE(link.tree.parent_dart == std::vector<int>{-1, 1});
  REQUIRE(corner_order(one_edge_link()) == std::vector<int>{0, 1});

  const auto loop = bfs_data(one_edge_loop());
  REQUIRE(loop.ordering.order == std::vector<int>{0});
  REQUIRE(corner_order(one_edge_loop()) == std::vector<int>{0, 1});

  REQUIRE(bfs_order(trivial_map()).order == std::vector<int>{0});
}

TEST_CASE("parallel edges: the tree keeps the root copy", "[traversal]") {
  const auto m = fixtures::parallel_pair();
  const auto b = bfs_data(m);
  REQUIRE(b.ordering.order == std::vector<int>{0, 1});
  REQUIRE(b.tree.parent_dart == std::vector<int>{-1, 1});  // twin(root), i.e. the root edge
  REQUIRE(corner_order(m) == std::vector<int>{0, 2, 1, 3});
  const auto c = canonicalize(m);
  REQUIRE(c.twin == std::vector<int>{2, 3, 0, 1});
  REQUIRE(c.next == std::vector<int>{1, 0, 3, 2});
  REQUIRE(c.root == 0);
}

TEST_CASE("seven-edge fixture: orders computed by hand", "[traversal]") {
  const auto m = fixtures::seven_edge();
  const auto b = bfs_data(m);
  // vertices by smallest dart: u=0, v=1, w=2, x=3, y=4
  REQUIRE(b.ordering.order == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(b.tree.parent_dart == std::vector<int>{-1, 1, 4, 9, 11});
  REQUIRE(corner_order(m) == std::vector<int>{0, 5, 1, 6, 7, 2, 4, 3, 8, 9, 10, 12, 11, 13});
  const auto c = canonicalize(m);
  REQUIRE(c.twin == std::vector<int>{2, 6, 0, 4, 3, 7, 1, 5, 9, 8, 12, 13, 10, 11});
  REQUIRE(c.next == std::vector<int>{1, 0, 3, 4, 5, 2, 7, 8, 6, 10, 11, 9, 13, 12});
  REQUIRE(c.root == 0);
  REQUIRE(validate(c).empty());
}

TEST_CASE("lollipop canonical form", "[traversal]") {
  const auto c = canonicalize(fixtures::lollipop());
  REQUIRE(c.twin == std::vector<int>{2, 3, 0, 1});
  REQUIRE(c.next == std::vector<int>{1, 2, 0, 3});
  REQUIRE(c.root == 0);
}

TEST_CASE("canonicalize is idempotent and label-independent", "[traversal]") {
  for (const auto& m : {one_edge_loop(), one_edge_link(), fixtures::lollipop(),
                        fixtures::parallel_pair(), fixtures::seven_edge()}) {
    const auto c = canonicalize(m);
    REQUIRE(canonicalize(c) == c);
    REQUIRE(validate(c).empty());
  }
  // relabel the seven-edge fixture by an arbitrary permutation fixing nothing
  const auto m = fixtures::seven_edge();
  std::vector<int> perm(m.num_darts);
  for (int d = 0; d < m.num_darts; ++d) perm[d] = (5 * d + 3) % m.num_darts;
  RootedMap r;
  r.num_darts = m.num_darts;
  r.twin.assign(m.num_darts, 0);
  r.next.assign(m.num_darts, 0);
  for (int d = 0; d < m.num_darts; ++d) {
    r.twin[perm[d]] = perm[m.twin[d]];
    r.next[perm[d]] = perm[m.next[d]];
  }
  r.root = perm[m.root];
  REQUIRE(validate(r).empty());
  REQUIRE(canonicalize(r) == canonicalize(m));
}
