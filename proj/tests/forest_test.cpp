#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "tamari/forest.hpp"

using namespace tamari;

namespace {

TreeNode L() { return TreeNode::leaf(); }
TreeNode C(int label, std::vector<TreeNode> children) {
  return TreeNode::caret(label, std::move(children));
}
TreeNode C0(std::vector<TreeNode> children) {
  return TreeNode::caret(0, std::move(children));
}

StarSequence S(int arity, const char* text) {
  return StarSequence::parse(arity, text);
}

}  // namespace

TEST_CASE("caret placement from a sequence") {
  LinearizedForest f = tau(S(2, "32541"));
  TreeNode want = C(5, {C(3, {L(), C(2, {L(), L()})}),
                        C(4, {L(), C(1, {L(), L()})})});
  REQUIRE(f.trees().size() == 1);
  CHECK(f.trees()[0] == want);
  CHECK(f.caret_count() == 5);
  CHECK(f.leaf_count() == 6);
}

TEST_CASE("sequences with stars give forests with several trees") {
  LinearizedForest f = tau(S(2, "35176**24"));
  std::vector<TreeNode> want = {
      C(7, {C(5, {C(3, {L(), L()}), C(1, {L(), L()})}), C(6, {L(), L()})}),
      L(),
      C(4, {C(2, {L(), L()}), L()})};
  CHECK(f.trees() == want);
  CHECK(f.caret_count() == 7);
}

TEST_CASE("forests built from words match the sequence route") {
  CHECK(forest_of_word(XWord::parse("x4 x1 x0 x1 x0"), 2) == tau(S(2, "32541")));
  CHECK(forest_of_word(XWord::parse("x2 x6 x0 x5 x0 x1 x0"), 2) ==
        tau(S(2, "35176**24")));
  CHECK(forest_of_word(XWord::parse("x5 x1 x0 x0"), 3) == tau(S(3, "32234114")));
  CHECK(forest_of_word(XWord(), 2) == LinearizedForest(2));
}

TEST_CASE("reading the word back off a forest") {
  CHECK(word_of(tau(S(2, "35176**24"))) == XWord::parse("x2 x6 x0 x5 x0 x1 x0"));
  CHECK(word_of(tau(S(2, "32541"))) == XWord::parse("x4 x1 x0 x1 x0"));
  CHECK(word_of(LinearizedForest(3)).empty());
}

TEST_CASE("gap labels invert caret placement") {
  for (const char* text : {"32541", "35176**24", "123", "321", "1*2"}) {
    StarSequence s = S(2, text);
    CHECK(pi(tau(s)) == s);
  }
  CHECK(pi(tau(S(3, "32234114"))) == S(3, "32234114"));
  CHECK(pi(tau(S(3, "2233**11*44"))) == S(3, "2233**11*44"));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    int arity = 2 + trial % 2;
    std::vector<int> letters(static_cast<std::size_t>(1 + trial % 5));
    std::uniform_int_distribution<int> idx(0, 5);
    for (int& l : letters) l = idx(rng);
    StarSequence s = sequence_from_word(XWord(letters), arity);
    CHECK(pi(tau(s)) == s);
    CHECK(word_of(tau(s)) == XWord(letters));
  }
}

TEST_CASE("stacking forests realizes the interlaced sequence") {
  LinearizedForest stacked = stack(tau(S(2, "32*41")), tau(S(2, "*2**1")));
  CHECK(pi(stacked) == S(2, "32*416**5"));
  CHECK(stacked == tau(S(2, "32*416**5")));

  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    int arity = 2 + trial % 2;
    auto random_seq = [&](int n) {
      std::vector<int> letters(static_cast<std::size_t>(n));
      std::uniform_int_distribution<int> idx(0, 4);
      for (int& l : letters) l = idx(rng);
      return sequence_from_word(XWord(letters), arity);
    };
    StarSequence a = random_seq(1 + trial % 4), b = random_seq(1 + trial % 3);
    CHECK(pi(stack(tau(a), tau(b))) == interlace(a, b));
  }
  // stacking onto the empty forest leaves the forest alone
  LinearizedForest f = tau(S(2, "32541"));
  CHECK(stack(f, LinearizedForest(2)) == f);
  CHECK(stack(LinearizedForest(2), f) == f);
  CHECK_THROWS_AS(stack(f, LinearizedForest(3)), std::domain_error);
}

TEST_CASE("linearizations of a shape") {
  ForestShape s = shape(tau(S(2, "32541")));
  auto all = linearizations(s);
  CHECK(std::count(all.begin(), all.end(), tau(S(2, "32541"))) == 1);
  std::set<std::string> keys;
  for (const LinearizedForest& f : all) {
    CHECK(shape(f) == s);
    keys.insert(f.str());
  }
  CHECK(keys.size() == all.size());  // all distinct

  // two caret children under a root can take labels 1 and 2 either way
  ForestShape vee(2, {C0({C0({L(), L()}), C0({L(), L()})})});
  CHECK(linearizations(vee).size() == 2);

  // each linearization corresponds to one member of the word class
  XWord w = XWord::parse("x0 x1 x0");
  CHECK(linearizations(shape(forest_of_word(w, 2))).size() ==
        enumerate_class(w, 2).size());
}

TEST_CASE("enumerating and counting single tree shapes") {
  auto shapes3 = enumerate_tree_shapes(2, 3);
  CHECK(shapes3.size() == 5);
  for (const ForestShape& s : shapes3) {
    CHECK(s.is_single_tree());
    CHECK(s.caret_count() == 3);
  }
  std::vector<std::string> keys;
  for (const ForestShape& s : shapes3) keys.push_back(s.str());
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == 5);

  long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(count_shapes(2, n) == catalan[n]);
  CHECK(count_shapes(3, 4) == 55);
  CHECK(count_shapes(3, 2) == 3);
  for (int n = 0; n <= 5; ++n) {
    CHECK(count_shapes(2, n) ==
          static_cast<long long>(enumerate_tree_shapes(2, n).size()));
    CHECK(count_shapes(3, n) ==
          static_cast<long long>(enumerate_tree_shapes(3, n).size()));
  }
  CHECK_THROWS_AS(count_shapes(2, 21), std::domain_error);
  CHECK_THROWS_AS(count_shapes(2, -1), std::invalid_argument);
}

TEST_CASE("tree products and indecomposables") {
  ForestShape c(2, {C0({L(), L()})});
  ForestShape left_comb(2, {C0({C0({L(), L()}), L()})});
  ForestShape right_comb(2, {C0({L(), C0({L(), L()})})});

  CHECK(tree_product(c, c) == left_comb);
  CHECK(is_indecomposable(c));
  CHECK(is_indecomposable(right_comb));
  CHECK_FALSE(is_indecomposable(left_comb));

  auto factors = factor_indecomposables(left_comb);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == c);
  CHECK(factors[1] == c);
  CHECK(factor_indecomposables(right_comb) ==
        std::vector<ForestShape>{right_comb});

  // the trivial tree is the unit
  ForestShape unit(2);
  CHECK(tree_product(c, unit) == c);
  CHECK(tree_product(unit, c) == c);
  CHECK(factor_indecomposables(unit).empty());
  CHECK_FALSE(is_indecomposable(unit));

  // every shape is the product of its factors, each indecomposable
  for (int arity : {2, 3}) {
    for (int n = 0; n <= (arity == 2 ? 5 : 3); ++n) {
      for (const ForestShape& t : enumerate_tree_shapes(arity, n)) {
        auto parts = factor_indecomposables(t);
        ForestShape acc(arity);
        for (const ForestShape& p : parts) {
          CHECK(is_indecomposable(p));
          acc = tree_product(acc, p);
        }
        CHECK(acc == t);
      }
    }
  }
  CHECK_THROWS_AS(tree_product(c, ForestShape(3)), std::domain_error);
}

TEST_CASE("json round trips") {
  for (const char* text : {"32541", "35176**24", "1*2"}) {
    LinearizedForest f = tau(S(2, text));
    CHECK(parse_forest_json(forest_json(f)) == f);
  }
  LinearizedForest f = tau(S(3, "32234114"));
  CHECK(parse_forest_json(forest_json(f)) == f);

  auto j = nlohmann::json::parse(forest_json(tau(S(2, "32541"))));
  CHECK(j["k"] == 2);
  CHECK(j["trees"].is_array());
  CHECK(j["trees"].size() == 1);
  CHECK(j["labels"].size() == 5);
  CHECK(j["labels"][0] == 5);  // preorder: root label first

  auto js = nlohmann::json::parse(shape_json(shape(tau(S(2, "32541")))));
  CHECK_FALSE(js.contains("labels"));
  CHECK(js["trees"][0].is_array());

  CHECK_THROWS_AS(parse_forest_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest_json("{\"k\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_forest_json(
                      "{\"k\": 2, \"trees\": [[null,null]], \"labels\": []}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_forest_json(
                      "{\"k\": 2, \"trees\": [[null,null]], \"labels\": [1,2]}"),
                  std::invalid_argument);
}

TEST_CASE("dot rendering") {
  std::string dot = forest_dot(tau(S(2, "1*2")));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
}

TEST_CASE("forest validation") {
  // labels must be a decreasing bijection onto 1..n
  CHECK_THROWS_AS(LinearizedForest(2, {C(1, {L(), L()}), C(1, {L(), L()})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearizedForest(2, {C(2, {L(), L()})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearizedForest(2, {C(1, {C(2, {L(), L()}), L()})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TreeNode::caret(-1, {L(), L()}), std::invalid_argument);
  CHECK_THROWS_AS(TreeNode::caret(1, {}), std::invalid_argument);
  // arity is enforced on every caret
  CHECK_THROWS_AS(LinearizedForest(3, {C(1, {L(), L()})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ForestShape(2, {C0({L(), L(), L()})}), std::invalid_argument);
  // shapes carry no labels
  CHECK_THROWS_AS(ForestShape(2, {C(1, {L(), L()})}), std::invalid_argument);
  CHECK_THROWS_AS(LinearizedForest(1), std::invalid_argument);

  // trailing singleton trees are trimmed away
  LinearizedForest padded(2, {C(1, {L(), L()}), L(), L()});
  CHECK(padded.trees().size() == 1);
  ForestShape empty_shape(2);
  CHECK(empty_shape.is_single_tree());
  CHECK(empty_shape.caret_count() == 0);
}
