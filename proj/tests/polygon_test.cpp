#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tamari/forest.hpp"
#include "tamari/polygon.hpp"

using namespace tamari;

namespace {

StarSequence S(int arity, const char* text) {
  return StarSequence::parse(arity, text);
}

using Diag = std::pair<int, int>;

PolygonPartition P(int arity, int carets, std::vector<Diag> diagonals) {
  return PolygonPartition(arity, carets, std::move(diagonals));
}

std::set<std::vector<int>> face_set(const PolygonPartition& p) {
  auto faces = p.faces();
  return {faces.begin(), faces.end()};
}

// One partition per tree of the forest.
std::vector<PolygonPartition> partition_list(const LinearizedForest& f) {
  ForestShape s = shape(f);
  std::vector<PolygonPartition> out;
  for (const TreeNode& t : s.trees())
    out.push_back(tree_to_partition(ForestShape(f.arity(), {t})));
  return out;
}

}  // namespace

TEST_CASE("path construction from a permutation") {
  auto paths = construction_paths(S(2, "132"));
  std::vector<std::vector<int>> want = {
      {0, 4}, {0, 2, 4}, {0, 2, 3, 4}, {0, 1, 2, 3, 4}};
  CHECK(paths == want);

  PolygonPartition p = partition_from_sequence(S(2, "132"));
  CHECK(p.arity() == 2);
  CHECK(p.caret_count() == 3);
  CHECK(p.vertex_count() == 5);
  CHECK(p.diagonals() == std::vector<Diag>{{0, 2}, {2, 4}});

  // both members of the congruence class give the same partition
  CHECK(partition_from_sequence(S(2, "231")) == p);

  CHECK(partition_from_sequence(S(2, "1")) == P(2, 1, {}));
  CHECK(partition_from_sequence(StarSequence(2)) == P(2, 0, {}));
  CHECK_THROWS_AS(partition_from_sequence(S(2, "1*2")), std::invalid_argument);
}

TEST_CASE("faces of a higher arity partition") {
  PolygonPartition p = P(3, 4, {{0, 5}, {1, 4}, {5, 8}});
  CHECK(p.vertex_count() == 10);
  std::set<std::vector<int>> want = {
      {1, 2, 3, 4}, {0, 1, 4, 5}, {5, 6, 7, 8}, {0, 5, 8, 9}};
  CHECK(face_set(p) == want);
  CHECK(p.faces().size() == 4);

  CHECK(face_set(P(2, 0, {})) == std::set<std::vector<int>>{{0, 1}});
}

TEST_CASE("diagonal sizes in the merged cell") {
  PolygonPartition p = P(3, 4, {{0, 5}, {1, 4}, {5, 8}});
  CHECK(diagonal_size(p, {0, 5}) == 1);
  CHECK(diagonal_size(p, {1, 4}) == 2);
  CHECK(diagonal_size(p, {5, 8}) == 2);
  CHECK_THROWS_AS(diagonal_size(p, {0, 4}), std::invalid_argument);

  PolygonPartition fan = P(2, 3, {{0, 2}, {0, 3}});
  CHECK(diagonal_size(fan, {0, 2}) == 1);
  CHECK(diagonal_size(fan, {0, 3}) == 1);

  PolygonPartition hex = P(3, 2, {{1, 4}});
  CHECK(diagonal_size(hex, {1, 4}) == 2);
}

TEST_CASE("flips increase the diagonal size") {
  PolygonPartition p = P(3, 4, {{0, 5}, {1, 4}, {5, 8}});
  PolygonPartition flipped = flip_up(p, {0, 5});
  CHECK(flipped.diagonals() == std::vector<Diag>{{1, 4}, {1, 8}, {5, 8}});
  CHECK(diagonal_size(flipped, {1, 8}) == 2);

  PolygonPartition fan = P(2, 3, {{0, 2}, {0, 3}});
  CHECK(flip_up(fan, {0, 2}).diagonals() == std::vector<Diag>{{0, 3}, {1, 3}});

  PolygonPartition square = P(2, 2, {{0, 2}});
  PolygonPartition other = flip_up(square, {0, 2});
  CHECK(other == P(2, 2, {{1, 3}}));
  CHECK(diagonal_size(other, {1, 3}) == 2);
  CHECK_THROWS_AS(flip_up(other, {1, 3}), std::domain_error);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(P(2, 3, {{0, 2}, {1, 3}}), std::invalid_argument);  // cross
  CHECK_THROWS_AS(P(2, 3, {{0, 2}, {0, 2}}), std::invalid_argument);  // dup
  CHECK_THROWS_AS(P(2, 3, {{0, 2}, {0, 4}}), std::invalid_argument);  // root
  CHECK_THROWS_AS(P(2, 3, {{0, 2}, {2, 3}}), std::invalid_argument);  // edge
  CHECK_THROWS_AS(P(2, 3, {{0, 2}}), std::invalid_argument);  // count
  CHECK_THROWS_AS(P(2, 3, {{0, 2}, {2, 9}}), std::invalid_argument);  // range
  // non-crossing but the faces are not all quadrilaterals
  CHECK_THROWS_AS(P(3, 3, {{0, 2}, {0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(P(1, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(P(2, -1, {}), std::invalid_argument);
}

TEST_CASE("rotation order on partitions") {
  Poset chain = tamari_order_partitions(3, 2);
  REQUIRE(chain.elements.size() == 3);
  CHECK(chain.covers.size() == 2);
  CHECK(chain.elements[0] == P(3, 2, {{0, 3}}).str());
  CHECK(chain.elements[1] == P(3, 2, {{1, 4}}).str());
  CHECK(chain.elements[2] == P(3, 2, {{2, 5}}).str());
  std::set<std::pair<int, int>> pairs;
  for (const CoverEdge& e : chain.covers) {
    pairs.insert({e.lower, e.upper});
    CHECK(e.transposed_value == -1);
  }
  CHECK(pairs == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});

  Poset pentagon = tamari_order_partitions(2, 3);
  CHECK(pentagon.elements.size() == 5);
  CHECK(pentagon.covers.size() == 5);
  CHECK(is_lattice(pentagon).is_lattice);

  CHECK(tamari_order_partitions(2, 0).elements.size() == 1);
  CHECK_THROWS_AS(tamari_order_partitions(2, 9, 100), std::domain_error);
}

TEST_CASE("partitions and trees are two views of one object") {
  ForestShape left_comb(
      2, {TreeNode::caret(0, {TreeNode::caret(0, {TreeNode::leaf(),
                                                  TreeNode::leaf()}),
                              TreeNode::leaf()})});
  CHECK(tree_to_partition(left_comb) == P(2, 2, {{0, 2}}));
  CHECK(partition_to_tree(P(2, 2, {{0, 2}})) == left_comb);
  CHECK(tree_to_partition(ForestShape(2)) == P(2, 0, {}));
  CHECK(partition_to_tree(P(2, 0, {})) == ForestShape(2));

  for (int arity : {2, 3}) {
    for (int n = 0; n <= (arity == 2 ? 5 : 4); ++n) {
      for (const ForestShape& t : enumerate_tree_shapes(arity, n)) {
        PolygonPartition p = tree_to_partition(t);
        CHECK(p.caret_count() == n);
        CHECK(partition_to_tree(p) == t);
      }
    }
  }

  // multi-tree forests have no single polygon
  LinearizedForest two_trees = tau(S(2, "1*2"));
  CHECK_THROWS_AS(tree_to_partition(shape(two_trees)), std::invalid_argument);

  // the sequence route and the tree route agree on permutations
  for (const StarSequence& s :
       sequences_with_pattern(BlockPattern(0, {4}, {}))) {
    CHECK(partition_from_sequence(s) == tree_to_partition(shape(tau(s))));
  }
}

TEST_CASE("gluing partition lists") {
  std::vector<PolygonPartition> first = {partition_from_sequence(S(2, "132"))};
  std::vector<PolygonPartition> second = {partition_from_sequence(S(2, "1"))};
  auto glued = glue(first, second);
  REQUIRE(glued.size() == 1);
  CHECK(glued[0] == P(2, 4, {{0, 2}, {2, 4}, {0, 4}}));
  CHECK(glued[0] == partition_from_sequence(S(2, "1324")));

  // gluing with nothing on either side changes nothing
  CHECK(glue(first, {}) == first);
  CHECK(glue({}, first) == first);

  // mirrors forest stacking at arity 3
  auto a = partition_list(tau(S(3, "2233**11*44")));
  auto b = partition_list(tau(S(3, "11*")));
  REQUIRE(a.size() == 4);
  CHECK(a[0] == P(3, 2, {{0, 3}}));
  CHECK(a[1] == P(3, 0, {}));
  CHECK(a[2] == P(3, 1, {}));
  CHECK(a[3] == P(3, 1, {}));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == P(3, 1, {}));
  auto ab = glue(a, b);
  auto want = partition_list(tau(interlace(S(3, "2233**11*44"), S(3, "11*"))));
  CHECK(ab == want);
  REQUIRE(want.size() == 2);
  CHECK(want[0] == P(3, 4, {{0, 3}, {0, 5}, {6, 9}}));
  CHECK(want[1] == P(3, 1, {}));

  CHECK_THROWS_AS(glue({P(2, 1, {})}, {P(3, 1, {})}), std::domain_error);
}

TEST_CASE("partition json round trips") {
  for (const PolygonPartition& p :
       {P(2, 3, {{0, 2}, {2, 4}}), P(3, 4, {{0, 5}, {1, 4}, {5, 8}}),
        P(2, 0, {})}) {
    CHECK(parse_partition_json(partition_json(p)) == p);
  }
  auto j = nlohmann::json::parse(partition_json(P(2, 3, {{0, 2}, {2, 4}})));
  CHECK(j["k"] == 2);
  CHECK(j["n"] == 3);
  CHECK(j["diagonals"].size() == 2);
  CHECK(j["diagonals"][0] == nlohmann::json::array({0, 2}));

  CHECK_THROWS_AS(parse_partition_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_json("{\"k\": 2, \"n\": 1}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_partition_json(
                      "{\"k\": 2, \"n\": 2, \"diagonals\": [[0]]}"),
                  std::invalid_argument);
}
