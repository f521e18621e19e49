#include "tamari/forest.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace tamari {

namespace {

void check_arity(int arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
}

void collect_labels(const TreeNode& node, int arity, std::vector<int>& labels,
                    int parent_label) {
  if (node.is_leaf()) return;
  if (static_cast<int>(node.children().size()) != arity)
    throw std::invalid_argument("caret must have exactly " + std::to_string(arity) +
                                " children");
  if (parent_label > 0 && node.label() >= parent_label)
    throw std::invalid_argument("caret labels must decrease from root to leaf");
  labels.push_back(node.label());
  for (const TreeNode& c : node.children())
    collect_labels(c, arity, labels, node.label());
}

std::string serialize(const TreeNode& node, bool with_labels) {
  if (node.is_leaf()) return "l";
  std::string out = "(";
  if (with_labels) {
    out += std::to_string(node.label());
    out += ':';
  }
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    if (i) out += ' ';
    out += serialize(node.children()[i], with_labels);
  }
  out += ')';
  return out;
}

std::string serialize_trees(const std::vector<TreeNode>& trees, bool with_labels) {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out += '|';
    out += serialize(trees[i], with_labels);
  }
  return out;
}

TreeNode strip_labels(const TreeNode& node) {
  if (node.is_leaf()) return TreeNode::leaf();
  std::vector<TreeNode> children;
  children.reserve(node.children().size());
  for (const TreeNode& c : node.children()) children.push_back(strip_labels(c));
  return TreeNode::caret(0, std::move(children));
}

void trim_trailing_singletons(std::vector<TreeNode>& trees) {
  while (!trees.empty() && trees.back().is_leaf()) trees.pop_back();
}

}  // namespace

TreeNode TreeNode::caret(int label, std::vector<TreeNode> children) {
  if (children.empty()) throw std::invalid_argument("caret needs children");
  if (label < 0) throw std::invalid_argument("negative caret label");
  TreeNode node;
  node.label_ = label;
  node.children_ = std::move(children);
  return node;
}

int TreeNode::caret_count() const {
  if (is_leaf()) return 0;
  int total = 1;
  for (const TreeNode& c : children_) total += c.caret_count();
  return total;
}

int TreeNode::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const TreeNode& c : children_) total += c.leaf_count();
  return total;
}

LinearizedForest::LinearizedForest(int arity) : arity_(arity), caret_count_(0) {
  check_arity(arity);
}

LinearizedForest::LinearizedForest(int arity, std::vector<TreeNode> trees)
    : arity_(arity), trees_(std::move(trees)) {
  check_arity(arity);
  trim_trailing_singletons(trees_);
  std::vector<int> labels;
  for (const TreeNode& t : trees_) collect_labels(t, arity_, labels, 0);
  caret_count_ = static_cast<int>(labels.size());
  std::sort(labels.begin(), labels.end());
  for (int j = 0; j < caret_count_; ++j) {
    if (labels[static_cast<std::size_t>(j)] != j + 1)
      throw std::invalid_argument("caret labels must be exactly 1..n");
  }
}

int LinearizedForest::leaf_count() const {
  int total = 0;
  for (const TreeNode& t : trees_) total += t.leaf_count();
  return total;
}

std::string LinearizedForest::str() const { return serialize_trees(trees_, true); }

ForestShape::ForestShape(int arity) : arity_(arity), caret_count_(0) {
  check_arity(arity);
}

ForestShape::ForestShape(int arity, std::vector<TreeNode> trees)
    : arity_(arity), trees_(std::move(trees)) {
  check_arity(arity);
  trim_trailing_singletons(trees_);
  std::vector<int> labels;
  for (const TreeNode& t : trees_) collect_labels(t, arity_, labels, -1);
  caret_count_ = static_cast<int>(labels.size());
  for (int l : labels) {
    if (l != 0) throw std::invalid_argument("shape carets must be unlabeled");
  }
}

bool ForestShape::is_single_tree() const { return trees_.size() <= 1; }

std::string ForestShape::str() const { return serialize_trees(trees_, false); }

LinearizedForest tau(const StarSequence& s) {
  int k = s.arity();
  int n = s.value_count();
  struct Root {
    TreeNode node;
    int lo, hi;  // leaf span
    Root(TreeNode nd, int l, int h) : node(std::move(nd)), lo(l), hi(h) {}
  };
  std::vector<Root> roots;
  int leaves = static_cast<int>(s.size()) + 1;
  roots.reserve(static_cast<std::size_t>(leaves));
  for (int i = 0; i < leaves; ++i) roots.emplace_back(TreeNode::leaf(), i, i);
  for (int j = 1; j <= n; ++j) {
    auto pos = s.positions_of(j);  // gap (p, p+1) for each 0-based p
    std::size_t a = 0;
    while (a < roots.size() && roots[a].hi != static_cast<int>(pos[0])) ++a;
    if (a + static_cast<std::size_t>(k) > roots.size() + 1 || a == roots.size())
      throw std::logic_error("caret " + std::to_string(j) + " is not coverable");
    for (int t = 2; t <= k; ++t) {
      if (roots[a + static_cast<std::size_t>(t - 1)].lo !=
          static_cast<int>(pos[static_cast<std::size_t>(t - 2)]) + 1)
        throw std::logic_error("caret " + std::to_string(j) + " is not coverable");
    }
    std::vector<TreeNode> children;
    children.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
      children.push_back(std::move(roots[a + static_cast<std::size_t>(t)].node));
    Root merged(TreeNode::caret(j, std::move(children)), roots[a].lo,
                roots[a + static_cast<std::size_t>(k - 1)].hi);
    roots[a] = std::move(merged);
    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                roots.begin() + static_cast<std::ptrdiff_t>(a) + k);
  }
  std::vector<TreeNode> trees;
  trees.reserve(roots.size());
  for (Root& r : roots) trees.push_back(std::move(r.node));
  return LinearizedForest(k, std::move(trees));
}

StarSequence pi(const LinearizedForest& f) {
  int total = f.leaf_count();
  std::vector<int> terms(total > 0 ? static_cast<std::size_t>(total - 1) : 0, kStar);
  int cursor = 0;
  std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
    if (node.is_leaf()) {
      ++cursor;
      return;
    }
    for (std::size_t t = 0; t < node.children().size(); ++t) {
      walk(node.children()[t]);
      if (t + 1 < node.children().size())
        terms[static_cast<std::size_t>(cursor - 1)] = node.label();
    }
  };
  for (const TreeNode& t : f.trees()) walk(t);
  return StarSequence(f.arity(), std::move(terms));
}

XWord word_of(const LinearizedForest& f) {
  int n = f.caret_count();
  std::vector<std::vector<int>> child_starts(static_cast<std::size_t>(n) + 1);
  int cursor = 0;
  std::function<int(const TreeNode&)> walk = [&](const TreeNode& node) -> int {
    if (node.is_leaf()) return cursor++;
    std::vector<int> starts;
    starts.reserve(node.children().size());
    for (const TreeNode& c : node.children()) starts.push_back(walk(c));
    child_starts[static_cast<std::size_t>(node.label())] = starts;
    return starts.front();
  };
  for (const TreeNode& t : f.trees()) walk(t);
  // Replay in label order.  A root keeps the start of its leftmost child,
  // so the rank of a start among surviving starts is the root index.
  std::set<int> absorbed;
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto& starts = child_starts[static_cast<std::size_t>(j)];
    int before = static_cast<int>(std::distance(
        absorbed.begin(), absorbed.lower_bound(starts.front())));
    letters.push_back(starts.front() - before);
    for (std::size_t t = 1; t < starts.size(); ++t) absorbed.insert(starts[t]);
  }
  return XWord(std::move(letters));
}

LinearizedForest forest_of_word(const XWord& w, int arity) {
  check_arity(arity);
  std::vector<TreeNode> roots;
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::size_t idx = static_cast<std::size_t>(w.index_at(j));
    while (roots.size() < idx + static_cast<std::size_t>(arity))
      roots.push_back(TreeNode::leaf());
    std::vector<TreeNode> children(
        std::make_move_iterator(roots.begin() + static_cast<std::ptrdiff_t>(idx)),
        std::make_move_iterator(roots.begin() + static_cast<std::ptrdiff_t>(idx + arity)));
    roots[idx] = TreeNode::caret(static_cast<int>(j) + 1, std::move(children));
    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                roots.begin() + static_cast<std::ptrdiff_t>(idx + arity));
  }
  return LinearizedForest(arity, std::move(roots));
}

LinearizedForest stack(const LinearizedForest& f, const LinearizedForest& g) {
  if (f.arity() != g.arity())
    throw std::domain_error("arity mismatch: " + std::to_string(f.arity()) + " vs " +
                            std::to_string(g.arity()));
  int lift = f.caret_count();
  std::vector<TreeNode> supply = f.trees();
  int g_leaves = g.leaf_count();
  while (static_cast<int>(supply.size()) < g_leaves) supply.push_back(TreeNode::leaf());
  std::size_t next = 0;
  std::function<TreeNode(const TreeNode&)> substitute = [&](const TreeNode& node) {
    if (node.is_leaf()) return supply[next++];
    std::vector<TreeNode> children;
    children.reserve(node.children().size());
    for (const TreeNode& c : node.children()) children.push_back(substitute(c));
    return TreeNode::caret(node.label() + lift, std::move(children));
  };
  std::vector<TreeNode> out;
  for (const TreeNode& t : g.trees()) out.push_back(substitute(t));
  for (; next < supply.size(); ++next) out.push_back(std::move(supply[next]));
  return LinearizedForest(f.arity(), std::move(out));
}

ForestShape shape(const LinearizedForest& f) {
  std::vector<TreeNode> trees;
  trees.reserve(f.trees().size());
  for (const TreeNode& t : f.trees()) trees.push_back(strip_labels(t));
  return ForestShape(f.arity(), std::move(trees));
}

std::vector<LinearizedForest> linearizations(const ForestShape& s) {
  // Flatten the carets in preorder; a caret may take the next label from
  // the top once its parent has one, so peel labels n..1 from the roots.
  struct Caret {
    std::vector<int> child_ids;
  };
  std::vector<Caret> carets;
  std::vector<int> top_ids;
  std::function<int(const TreeNode&)> flatten_node = [&](const TreeNode& node) -> int {
    if (node.is_leaf()) return -1;
    int id = static_cast<int>(carets.size());
    carets.push_back({});
    std::vector<int> kids;
    for (const TreeNode& c : node.children()) {
      int cid = flatten_node(c);
      if (cid >= 0) kids.push_back(cid);
    }
    carets[static_cast<std::size_t>(id)].child_ids = std::move(kids);
    return id;
  };
  for (const TreeNode& t : s.trees()) {
    int id = flatten_node(t);
    if (id >= 0) top_ids.push_back(id);
  }
  int n = static_cast<int>(carets.size());
  std::vector<int> assigned(static_cast<std::size_t>(n), 0);
  std::vector<int> available = top_ids;
  std::vector<LinearizedForest> out;

  std::function<TreeNode(const TreeNode&, int&)> rebuild =
      [&](const TreeNode& node, int& cursor) -> TreeNode {
    if (node.is_leaf()) return TreeNode::leaf();
    int id = cursor++;
    std::vector<TreeNode> children;
    children.reserve(node.children().size());
    for (const TreeNode& c : node.children()) children.push_back(rebuild(c, cursor));
    return TreeNode::caret(assigned[static_cast<std::size_t>(id)], std::move(children));
  };

  std::function<void(int)> assign = [&](int label) {
    if (label == 0) {
      std::vector<TreeNode> trees;
      int cursor = 0;
      for (const TreeNode& t : s.trees()) trees.push_back(rebuild(t, cursor));
      out.push_back(LinearizedForest(s.arity(), std::move(trees)));
      return;
    }
    for (std::size_t i = 0; i < available.size(); ++i) {
      int id = available[i];
      assigned[static_cast<std::size_t>(id)] = label;
      std::vector<int> saved = available;
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(i));
      for (int cid : carets[static_cast<std::size_t>(id)].child_ids)
        available.push_back(cid);
      assign(label - 1);
      available = std::move(saved);
    }
  };
  assign(n);
  std::sort(out.begin(), out.end(),
            [](const LinearizedForest& a, const LinearizedForest& b) {
              return a.str() < b.str();
            });
  return out;
}

std::vector<ForestShape> enumerate_tree_shapes(int arity, int carets) {
  check_arity(arity);
  if (carets < 0) throw std::invalid_argument("negative caret count");
  std::vector<std::vector<TreeNode>> memo(static_cast<std::size_t>(carets) + 1);
  memo[0] = {TreeNode::leaf()};
  for (int m = 1; m <= carets; ++m) {
    std::vector<TreeNode> shapes;
    std::vector<TreeNode> children;
    std::function<void(int, int)> pick = [&](int slot, int remaining) {
      if (slot == arity) {
        shapes.push_back(TreeNode::caret(0, children));
        return;
      }
      int lo = (slot == arity - 1) ? remaining : 0;
      for (int c = lo; c <= remaining; ++c) {
        for (const TreeNode& sub : memo[static_cast<std::size_t>(c)]) {
          children.push_back(sub);
          pick(slot + 1, remaining - c);
          children.pop_back();
        }
      }
    };
    pick(0, m - 1);
    memo[static_cast<std::size_t>(m)] = std::move(shapes);
  }
  std::vector<ForestShape> out;
  out.reserve(memo[static_cast<std::size_t>(carets)].size());
  for (TreeNode& t : memo[static_cast<std::size_t>(carets)])
    out.push_back(ForestShape(arity, {std::move(t)}));
  std::sort(out.begin(), out.end(),
            [](const ForestShape& a, const ForestShape& b) { return a.str() < b.str(); });
  return out;
}

long long count_shapes(int arity, int carets) {
  check_arity(arity);
  if (carets < 0) throw std::invalid_argument("negative caret count");
  if (carets > 20) throw std::domain_error("caret count beyond desk scale");
  std::vector<long long> t(static_cast<std::size_t>(carets) + 1, 0);
  t[0] = 1;
  for (int m = 1; m <= carets; ++m) {
    // ways[s]: forests of j children with s carets total
    std::vector<long long> ways(static_cast<std::size_t>(m), 0);
    ways[0] = 1;
    for (int j = 0; j < arity; ++j) {
      std::vector<long long> next(static_cast<std::size_t>(m), 0);
      for (int s = 0; s < m; ++s) {
        if (ways[static_cast<std::size_t>(s)] == 0) continue;
        for (int c = 0; s + c < m; ++c)
          next[static_cast<std::size_t>(s + c)] +=
              ways[static_cast<std::size_t>(s)] * t[static_cast<std::size_t>(c)];
      }
      ways = std::move(next);
    }
    t[static_cast<std::size_t>(m)] = ways[static_cast<std::size_t>(m - 1)];
  }
  return t[static_cast<std::size_t>(carets)];
}

namespace {

const TreeNode& single_root(const ForestShape& t, const char* who) {
  if (!t.is_single_tree())
    throw std::invalid_argument(std::string(who) + " requires a single tree");
  static const TreeNode trivial = TreeNode::leaf();
  return t.trees().empty() ? trivial : t.trees().front();
}

TreeNode replace_leftmost_leaf(const TreeNode& node, const TreeNode& replacement) {
  if (node.is_leaf()) return replacement;
  std::vector<TreeNode> children = node.children();
  children[0] = replace_leftmost_leaf(children[0], replacement);
  return TreeNode::caret(node.label(), std::move(children));
}

}  // namespace

ForestShape tree_product(const ForestShape& r, const ForestShape& s) {
  if (r.arity() != s.arity())
    throw std::domain_error("arity mismatch: " + std::to_string(r.arity()) + " vs " +
                            std::to_string(s.arity()));
  const TreeNode& rr = single_root(r, "tree_product");
  const TreeNode& sr = single_root(s, "tree_product");
  if (sr.is_leaf()) return r;
  return ForestShape(r.arity(), {replace_leftmost_leaf(sr, rr)});
}

bool is_indecomposable(const ForestShape& t) {
  const TreeNode& root = single_root(t, "is_indecomposable");
  if (root.is_leaf()) return false;  // the unit is not a factor
  return root.children().front().is_leaf();
}

std::vector<ForestShape> factor_indecomposables(const ForestShape& t) {
  const TreeNode& root = single_root(t, "factor_indecomposables");
  if (root.is_leaf()) return {};
  // Cut at every caret on the leftmost path; pieces listed bottom-up so
  // that their left-to-right tree_product recomposes t.
  std::vector<ForestShape> pieces;
  const TreeNode* cur = &root;
  std::vector<const TreeNode*> path;
  while (!cur->is_leaf()) {
    path.push_back(cur);
    cur = &cur->children().front();
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const TreeNode* node = *it;
    std::vector<TreeNode> children = node->children();
    if (!children.front().is_leaf()) children[0] = TreeNode::leaf();
    pieces.push_back(ForestShape(t.arity(), {TreeNode::caret(0, std::move(children))}));
  }
  return pieces;
}

namespace {

nlohmann::json tree_json(const TreeNode& node) {
  if (node.is_leaf()) return nullptr;
  nlohmann::json arr = nlohmann::json::array();
  for (const TreeNode& c : node.children()) arr.push_back(tree_json(c));
  return arr;
}

void labels_preorder(const TreeNode& node, std::vector<int>& out) {
  if (node.is_leaf()) return;
  out.push_back(node.label());
  for (const TreeNode& c : node.children()) labels_preorder(c, out);
}

TreeNode tree_from_json(const nlohmann::json& j, const std::vector<int>& labels,
                        std::size_t& cursor) {
  if (j.is_null()) return TreeNode::leaf();
  if (!j.is_array()) throw std::invalid_argument("tree nodes must be arrays or null");
  if (cursor >= labels.size()) throw std::invalid_argument("too few caret labels");
  int label = labels[cursor++];
  std::vector<TreeNode> children;
  children.reserve(j.size());
  for (const auto& c : j) children.push_back(tree_from_json(c, labels, cursor));
  return TreeNode::caret(label, std::move(children));
}

}  // namespace

std::string forest_json(const LinearizedForest& f) {
  nlohmann::json j;
  j["k"] = f.arity();
  nlohmann::json trees = nlohmann::json::array();
  std::vector<int> labels;
  for (const TreeNode& t : f.trees()) {
    trees.push_back(tree_json(t));
    labels_preorder(t, labels);
  }
  j["trees"] = std::move(trees);
  j["labels"] = std::move(labels);
  return j.dump();
}

std::string shape_json(const ForestShape& s) {
  nlohmann::json j;
  j["k"] = s.arity();
  nlohmann::json trees = nlohmann::json::array();
  for (const TreeNode& t : s.trees()) trees.push_back(tree_json(t));
  j["trees"] = std::move(trees);
  return j.dump();
}

LinearizedForest parse_forest_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad forest JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("trees"))
    throw std::invalid_argument("forest JSON needs \"k\" and \"trees\"");
  int arity = j["k"].get<int>();
  std::vector<int> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<int>>();
  std::size_t cursor = 0;
  std::vector<TreeNode> trees;
  for (const auto& t : j["trees"]) trees.push_back(tree_from_json(t, labels, cursor));
  if (cursor != labels.size()) throw std::invalid_argument("too many caret labels");
  return LinearizedForest(arity, std::move(trees));
}

std::string forest_dot(const LinearizedForest& f) {
  std::string out = "digraph forest {\n";
  int leaf_id = 0;
  int next_node = 0;
  std::function<std::string(const TreeNode&)> emit = [&](const TreeNode& node) {
    std::string name = "n" + std::to_string(next_node++);
    if (node.is_leaf()) {
      out += "  " + name + " [shape=box,label=\"" + std::to_string(leaf_id++) + "\"];\n";
      return name;
    }
    out += "  " + name + " [shape=circle,label=\"" + std::to_string(node.label()) +
           "\"];\n";
    for (const TreeNode& c : node.children()) {
      std::string child = emit(c);
      out += "  " + name + " -> " + child + ";\n";
    }
    return name;
  };
  for (const TreeNode& t : f.trees()) emit(t);
  out += "}\n";
  return out;
}

}  // namespace tamari
