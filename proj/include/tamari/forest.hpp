#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/star_sequence.hpp"
#include "tamari/xword.hpp"

namespace tamari {

// Node of a k-ary tree.  A node either has no children (leaf) or exactly
// k children (caret).  Caret labels carry the linearization; shape trees
// use label 0 everywhere.
class TreeNode {
public:
  static TreeNode leaf() { return TreeNode(); }
  static TreeNode caret(int label, std::vector<TreeNode> children);

  bool is_leaf() const { return children_.empty(); }
  int label() const { return label_; }
  const std::vector<TreeNode>& children() const { return children_; }

  int caret_count() const;
  int leaf_count() const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;

private:
  TreeNode() = default;
  int label_ = 0;
  std::vector<TreeNode> children_;
};

// A forest of k-ary trees whose carets are labeled bijectively by 1..n
// with labels strictly decreasing from root to leaf.  Leaves are labeled
// 0,1,2,... left to right across the forest and never stored.  Only the
// trees up to the last nontrivial one are stored; an infinite tail of
// singleton trees is implicit, so trailing singletons are trimmed.
class LinearizedForest {
public:
  explicit LinearizedForest(int arity);
  LinearizedForest(int arity, std::vector<TreeNode> trees);

  int arity() const { return arity_; }
  int caret_count() const { return caret_count_; }
  const std::vector<TreeNode>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  int leaf_count() const;  // leaves of the stored trees

  std::string str() const;  // canonical serialization, usable as a set key

  friend bool operator==(const LinearizedForest&, const LinearizedForest&) = default;

private:
  int arity_;
  int caret_count_;
  std::vector<TreeNode> trees_;
};

// A forest with the caret labels erased.  Same storage conventions.
class ForestShape {
public:
  explicit ForestShape(int arity);
  ForestShape(int arity, std::vector<TreeNode> trees);

  int arity() const { return arity_; }
  int caret_count() const { return caret_count_; }
  const std::vector<TreeNode>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  bool is_single_tree() const;

  std::string str() const;

  friend bool operator==(const ForestShape&, const ForestShape&) = default;

private:
  int arity_;
  int caret_count_;
  std::vector<TreeNode> trees_;
};

// Builds the forest caret by caret: caret j covers the gaps (p, p+1) at
// the 0-based positions p of value j, joining the k adjacent subtrees.
LinearizedForest tau(const StarSequence& s);

// Inverse direction: term p is the label of the caret covering the gap
// (p, p+1), star when the gap separates two trees.
StarSequence pi(const LinearizedForest& f);

// Replays the construction in label order; letter j records the index,
// among the roots present at that moment (implicit singletons included),
// of the root the caret j takes as its leftmost child.
XWord word_of(const LinearizedForest& f);

// Replays a word directly: letter i_j joins the k consecutive roots
// starting at root i_j under a caret labeled j.
LinearizedForest forest_of_word(const XWord& w, int arity);

// Graded product: root i of f is substituted for leaf i of g, and g's
// caret labels are lifted by f.caret_count().
LinearizedForest stack(const LinearizedForest& f, const LinearizedForest& g);

ForestShape shape(const LinearizedForest& f);

// All decreasing caret labelings of the shape, sorted by serialization.
std::vector<LinearizedForest> linearizations(const ForestShape& s);

// All single-tree shapes with the given caret count, sorted.
std::vector<ForestShape> enumerate_tree_shapes(int arity, int carets);

// Number of single-tree shapes, by the children-composition recurrence.
long long count_shapes(int arity, int carets);

// Product of single trees: r replaces the leftmost leaf of s.
ForestShape tree_product(const ForestShape& r, const ForestShape& s);

// A single tree factors under tree_product exactly along its leftmost
// path; it is indecomposable iff the root's leftmost subtree is trivial.
bool is_indecomposable(const ForestShape& t);
std::vector<ForestShape> factor_indecomposables(const ForestShape& t);

// JSON: {"k": 2, "trees": [[null,[null,null]], null], "labels": [2, 1]}
// with trees as nested arrays, null for leaves, and caret labels listed
// in preorder across the trees.  Shapes omit "labels".
std::string forest_json(const LinearizedForest& f);
std::string shape_json(const ForestShape& s);
LinearizedForest parse_forest_json(std::string_view text);

// DOT rendering: leaves as boxes labeled by leaf index, carets as
// circles labeled by linearization label.
std::string forest_dot(const LinearizedForest& f);

}  // namespace tamari
