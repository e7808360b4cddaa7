#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "fixtures.hpp"
#include "mapblocks/block_tree.hpp"

using namespace mapblocks;

TEST_CASE("one-edge maps: root of outdegree 2 with two leaves", "[block_tree]") {
  for (const auto& m : {one_edge_loop(), one_edge_link()}) {
    const auto t = block_tree(m);
    REQUIRE(tree_shape(t) == std::vector<int>{2, 0, 0});
    REQUIRE(t.block == canonicalize(m));
    REQUIRE(assemble(t) == canonicalize(m));
  }
  REQUIRE(tree_shape(block_tree(trivial_map())) == std::vector<int>{0});
  REQUIRE(assemble(block_tree(trivial_map())) == trivial_map());
}

TEST_CASE("lollipop: loop root block with the pendant edge in its corner", "[block_tree]") {
  const auto m = fixtures::lollipop();
  const auto t = block_tree(m);
  REQUIRE(tree_shape(t) == std::vector<int>{2, 2, 0, 0, 0});
  REQUIRE(t.block == one_edge_loop());
  REQUIRE(t.children[0].block == one_edge_link());
  REQUIRE(t.children[1].is_leaf());
  REQUIRE(tree_block_sizes(t) == std::vector<int>{1, 1});
  REQUIRE(assemble(t) == canonicalize(m));
}

TEST_CASE("pendant submaps", "[block_tree]") {
  const auto m = fixtures::lollipop();
  REQUIRE(pendant_submap(m, 0) == one_edge_link());
  REQUIRE(pendant_submap(m, 1) == trivial_map());
  REQUIRE_THROWS_AS(pendant_submap(m, 2), std::invalid_argument);  // not in the root block

  const auto s = fixtures::seven_edge();
  REQUIRE(pendant_submap(s, 0) == trivial_map());
  REQUIRE(pendant_submap(s, 1) == one_edge_loop());
  const auto p = pendant_submap(s, 3);
  REQUIRE(p.edges() == 3);  // bridge plus the parallel pair
  REQUIRE(validate(p).empty());

  // any dart of a 2-connected map has an empty corner
  const auto pp = fixtures::parallel_pair();
  for (int d = 0; d < pp.num_darts; ++d) REQUIRE(pendant_submap(pp, d) == trivial_map());
}

TEST_CASE("seven-edge fixture: hand-derived tree", "[block_tree]") {
  const auto m = fixtures::seven_edge();
  const auto t = block_tree(m);
  REQUIRE(tree_shape(t) == std::vector<int>{6, 0, 0, 2, 0, 0, 0, 0, 2, 0, 4, 0, 0, 0, 0});
  REQUIRE(t.block.edges() == 3);                // triangle root block
  REQUIRE(t.children[2].block == one_edge_loop());
  REQUIRE(t.children[5].block == one_edge_link());  // the bridge
  REQUIRE(t.children[5].children[1].block == canonicalize(fixtures::parallel_pair()));
  REQUIRE(tree_block_sizes(t) == std::vector<int>{3, 2, 1, 1});

  // outdegree sum = 2 * edges; node count = 2 * edges + 1
  const auto shape = tree_shape(t);
  REQUIRE(std::accumulate(shape.begin(), shape.end(), 0) == 2 * m.edges());
  REQUIRE(static_cast<int>(shape.size()) == 2 * m.edges() + 1);
  for (int d : shape) REQUIRE(d % 2 == 0);

  REQUIRE(assemble(t) == canonicalize(m));
}

TEST_CASE("assemble rejects malformed trees", "[block_tree]") {
  BlockTreeNode bad;
  bad.block = one_edge_loop();
  bad.children.resize(1);  // needs exactly 2
  bad.children[0].block = trivial_map();
  REQUIRE_THROWS_WITH(assemble(bad), Catch::Matchers::ContainsSubstring("degree/block mismatch"));

  BlockTreeNode sep;  // separable block is not allowed on a node
  sep.block = canonicalize(fixtures::lollipop());
  sep.children.resize(4);
  REQUIRE_THROWS_WITH(assemble(sep), Catch::Matchers::ContainsSubstring("not 2-connected"));

  BlockTreeNode leaf;  // nontrivial leaf
  leaf.block = one_edge_loop();
  REQUIRE_THROWS_AS(assemble(leaf), std::invalid_argument);
}

TEST_CASE("corner order restricted to a block equals the block's own order", "[block_tree]") {
  // For the root block: filter the map's corner order to block darts and map
  // through the extraction; must equal corner_order of the extracted block.
  for (const auto& m : {fixtures::lollipop(), fixtures::seven_edge()}) {
    const auto dec = blocks(m);
    const auto& bdarts = dec.blocks[dec.block_of[m.root]];
    const auto sub = extract_submap(m, bdarts, m.root);
    std::vector<int> local(m.num_darts, -1);
    for (int i = 0; i < static_cast<int>(bdarts.size()); ++i) local[bdarts[i]] = i;
    std::vector<int> filtered;
    for (int d : corner_order(m))
      if (local[d] >= 0) filtered.push_back(local[d]);
    REQUIRE(filtered == corner_order(sub.map));
  }
}
