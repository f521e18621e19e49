#include "tamari/encodings.hpp"

#include <functional>
#include <stdexcept>

#include "tamari/forest.hpp"

namespace tamari {

std::vector<int> huang_tamari_encoding(const ForestShape& s) {
  if (s.arity() != 2)
    throw std::invalid_argument("encoding is defined for binary shapes only");
  // In-order over carets; entry = largest leaf number in the caret's
  // subtree, leaves numbered 0.. left to right as everywhere else.
  std::vector<int> code;
  int leaf_cursor = 0;
  std::function<int(const TreeNode&)> walk = [&](const TreeNode& node) -> int {
    if (node.is_leaf()) return leaf_cursor++;
    int left_max = walk(node.children()[0]);
    std::size_t slot = code.size();
    code.push_back(0);
    int right_max = walk(node.children()[1]);
    int mx = right_max > left_max ? right_max : left_max;
    code[slot] = mx;
    return mx;
  };
  for (const TreeNode& t : s.trees()) walk(t);
  return code;
}

std::vector<int> bjorner_wachs_encoding(const StarSequence& s) {
  if (s.arity() != 2) throw std::invalid_argument("encoding needs a permutation");
  int n = s.value_count();
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("encoding needs a star-free sequence");
  // Work in the inverse word w (w[p] = v iff s has v at one-based position p
  // swapped: s[q] = v  =>  w[v-1] = q+1).  r_p counts the consecutive terms
  // right after position p that are all smaller than w[p].
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int q = 0; q < n; ++q)
    w[static_cast<std::size_t>(s.terms()[static_cast<std::size_t>(q)] - 1)] = q + 1;
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) {
    int anchor = w[static_cast<std::size_t>(p)];
    int q = p + 1;
    while (q < n && w[static_cast<std::size_t>(q)] < anchor) ++q;
    r[static_cast<std::size_t>(p)] = q - p - 1;
  }
  return r;
}

}  // namespace tamari
