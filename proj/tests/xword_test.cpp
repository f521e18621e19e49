#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "tamari/xword.hpp"

using namespace tamari;

namespace {

XWord W(const char* text) { return XWord::parse(text); }

// Independent oracle: all words reachable by both rules in any order.
std::set<std::string> reachable(const XWord& start, int arity) {
  std::set<std::string> seen{start.str()};
  std::vector<XWord> queue{start};
  while (!queue.empty()) {
    XWord w = queue.back();
    queue.pop_back();
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      for (bool up : {true, false}) {
        try {
          XWord next = up ? apply_rule_up(w, arity, pos)
                          : apply_rule_down(w, arity, pos);
          if (seen.insert(next.str()).second) queue.push_back(next);
        } catch (const std::domain_error&) {
        }
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("word parsing accepts both text forms") {
  CHECK(W("x4 x1 x0 x1 x0").indices() == std::vector<int>{4, 1, 0, 1, 0});
  CHECK(W("4,1,0,1,0") == W("x4 x1 x0 x1 x0"));
  CHECK(W("  x2   x0 ") == W("2,0"));
  CHECK(W("").empty());
  CHECK(W("   ").empty());
  CHECK(W("x12").indices() == std::vector<int>{12});
  CHECK(W("7").indices() == std::vector<int>{7});
  CHECK_THROWS_AS(XWord::parse("x4 1"), std::invalid_argument);
  CHECK_THROWS_AS(XWord::parse("x-1"), std::invalid_argument);
  CHECK_THROWS_AS(XWord::parse("4,,0"), std::invalid_argument);
  CHECK_THROWS_AS(XWord::parse("y3"), std::invalid_argument);
}

TEST_CASE("word emission uses the x form") {
  CHECK(W("4,1,0,1,0").str() == "x4 x1 x0 x1 x0");
  CHECK(XWord().str().empty());
}

TEST_CASE("rewriting rules act on adjacent letters") {
  // x_i x_j -> x_{j+k-1} x_i for i < j
  CHECK(apply_rule_up(W("x0 x1 x0"), 2, 0) == W("x2 x0 x0"));
  CHECK(apply_rule_down(W("x2 x0 x0"), 2, 0) == W("x0 x1 x0"));
  CHECK(apply_rule_up(W("x0 x1"), 3, 0) == W("x3 x0"));
  CHECK(apply_rule_down(W("x3 x0"), 3, 0) == W("x0 x1"));
  // up needs i < j, down needs a >= b + k
  CHECK_THROWS_AS(apply_rule_up(W("x1 x0"), 2, 0), std::domain_error);
  CHECK_THROWS_AS(apply_rule_up(W("x1 x1"), 2, 0), std::domain_error);
  CHECK_THROWS_AS(apply_rule_down(W("x2 x1"), 2, 0), std::domain_error);
  CHECK_THROWS_AS(apply_rule_down(W("x0 x1"), 2, 0), std::domain_error);
  // positions without a letter pair are also rejected
  CHECK_THROWS_AS(apply_rule_up(W("x0 x1"), 2, 1), std::domain_error);
  CHECK_THROWS_AS(apply_rule_up(W("x0"), 2, 0), std::domain_error);
}

TEST_CASE("normal form predicates") {
  CHECK(is_top_normal(W("x2 x0 x0")));
  CHECK(is_top_normal(W("x3 x3 x1")));
  CHECK_FALSE(is_top_normal(W("x0 x1 x0")));
  CHECK(is_top_normal(XWord()));
  CHECK(is_bottom_normal(W("x0 x1 x0"), 2));  // decreases of 1 are fine
  CHECK_FALSE(is_bottom_normal(W("x2 x0 x0"), 2));
  CHECK(is_bottom_normal(W("x2 x0 x0"), 3));
  CHECK_FALSE(is_bottom_normal(W("x3 x0"), 3));
  CHECK(is_bottom_normal(XWord(), 2));
}

TEST_CASE("normal forms against the exhaustive class oracle") {
  // Every congruence class holds exactly one top and one bottom normal
  // word; the scan strategies must land on them.
  for (const char* text : {"x0 x1 x0", "x4 x1 x0 x1 x0", "x2 x2 x1", "x0 x0 x3"}) {
    for (int arity : {2, 3}) {
      XWord w = W(text);
      auto cls = reachable(w, arity);
      std::vector<std::string> tops, bottoms;
      for (const std::string& s : cls) {
        XWord m = XWord::parse(s);
        if (is_top_normal(m)) tops.push_back(s);
        if (is_bottom_normal(m, arity)) bottoms.push_back(s);
      }
      REQUIRE(tops.size() == 1);
      REQUIRE(bottoms.size() == 1);
      CHECK(top_normal_form(w, arity).str() == tops.front());
      CHECK(bottom_normal_form(w, arity).str() == bottoms.front());
    }
  }
}

TEST_CASE("frozen normal form values") {
  CHECK(top_normal_form(W("x0 x1 x0"), 2) == W("x2 x0 x0"));
  CHECK(bottom_normal_form(W("x4 x1 x0 x1 x0"), 2) == W("x1 x0 x2 x1 x0"));
  CHECK(top_normal_form(W("x6 x0 x0 x3 x0"), 3) == W("x9 x6 x0 x0 x0"));
  CHECK(top_normal_form(XWord(), 2).empty());
}

TEST_CASE("equivalence and class enumeration") {
  CHECK(equivalent(W("x0 x1 x0"), W("x2 x0 x0"), 2));
  CHECK_FALSE(equivalent(W("x0 x1"), W("x1 x0"), 2));
  CHECK_FALSE(equivalent(W("x0"), W("x0 x0"), 2));
  // same letters, different arity: x0 x1 -> x2 x0 only when k = 2
  CHECK(equivalent(W("x0 x1"), W("x2 x0"), 2));
  CHECK_FALSE(equivalent(W("x0 x1"), W("x2 x0"), 3));

  auto cls = enumerate_class(W("x0 x1 x0"), 2);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == W("x0 x1 x0"));  // sorted lexicographically
  CHECK(cls[1] == W("x2 x0 x0"));

  auto oracle = reachable(W("x4 x1 x0 x1 x0"), 2);
  auto got = enumerate_class(W("x4 x1 x0 x1 x0"), 2);
  REQUIRE(got.size() == oracle.size());
  CHECK(std::is_sorted(got.begin(), got.end()));
  for (const XWord& w : got) CHECK(oracle.count(w.str()) == 1);
}

TEST_CASE("rewriting is confluent on random words") {
  std::mt19937 rng(20240901);
  std::uniform_int_distribution<int> len(0, 5), idx(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int arity = trial % 2 == 0 ? 2 : 3;
    std::vector<int> letters(static_cast<std::size_t>(len(rng)));
    for (int& l : letters) l = idx(rng);
    XWord w(letters);
    XWord top = top_normal_form(w, arity);
    XWord bottom = bottom_normal_form(w, arity);
    CHECK(is_top_normal(top));
    CHECK(is_bottom_normal(bottom, arity));
    CHECK(top.size() == w.size());
    CHECK(bottom.size() == w.size());
    // every class member normalizes to the same pair
    for (const XWord& m : enumerate_class(w, arity)) {
      CHECK(top_normal_form(m, arity) == top);
      CHECK(bottom_normal_form(m, arity) == bottom);
    }
  }
}

TEST_CASE("inversion word membership bounds") {
  CHECK(is_inversion_word(W("x4 x1 x0 x1 x0"), 2, 5));
  CHECK_FALSE(is_inversion_word(W("x5 x1 x0 x1 x0"), 2, 5));  // 5 > (n-1)
  CHECK_FALSE(is_inversion_word(W("x4 x1 x0 x1 x0"), 2, 4));  // wrong length
  // words of sequences with stars overshoot the star-free bounds
  CHECK_FALSE(is_inversion_word(W("x2 x6 x0 x5 x0 x1 x0"), 2, 7));
  CHECK(is_inversion_word(W("x5 x1 x0 x0"), 3, 4));
  CHECK_FALSE(is_inversion_word(W("x7 x1 x0 x0"), 3, 4));  // 7 > 2*(4-1)
  CHECK(is_inversion_word(XWord(), 2, 0));
}

TEST_CASE("monoid elements multiply through normal forms") {
  ThompsonElement a(W("x6 x0 x0"), 3);
  ThompsonElement b(W("x3 x0"), 3);
  CHECK(mul(a, b).canonical() == W("x9 x6 x0 x0 x0"));
  ThompsonElement id(3);
  CHECK(mul(a, id) == a);
  CHECK(mul(id, a) == a);
  // representatives of one class give the same element
  CHECK(ThompsonElement(W("x0 x1 x0"), 2) == ThompsonElement(W("x2 x0 x0"), 2));
  CHECK_THROWS_AS(mul(a, ThompsonElement(2)), std::domain_error);
}

TEST_CASE("words order lexicographically") {
  CHECK(W("x0 x1") < W("x0 x2"));
  CHECK(W("x0") < W("x0 x0"));
  CHECK(W("x10") > W("x9"));  // numeric, not textual
}
