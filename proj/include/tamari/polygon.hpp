#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamari/forest.hpp"
#include "tamari/order.hpp"
#include "tamari/star_sequence.hpp"

namespace tamari {

// Partition of a convex ((k-1)n+2)-gon into n faces with k+1 sides each
// by n-1 pairwise non-crossing diagonals.  Vertices are 0..(k-1)n+1 in
// convex position; (0, (k-1)n+1) is the root edge.  n = 0 is the 2-gon.
// Construction validates non-crossing and the face sizes.
class PolygonPartition {
public:
  PolygonPartition(int arity, int carets,
                   std::vector<std::pair<int, int>> diagonals);

  int arity() const { return arity_; }
  int caret_count() const { return carets_; }
  int vertex_count() const { return (arity_ - 1) * carets_ + 2; }
  const std::vector<std::pair<int, int>>& diagonals() const {
    return diagonals_;
  }

  // Faces as ascending vertex lists; edges are cyclically consecutive
  // pairs.  The 2-gon has the single face {0, 1}.
  std::vector<std::vector<int>> faces() const;

  std::string str() const;  // same as the JSON form

  friend bool operator==(const PolygonPartition&, const PolygonPartition&) = default;

private:
  int arity_;
  int carets_;
  std::vector<std::pair<int, int>> diagonals_;
};

// Path construction: starting from the path (0, (k-1)n+1), insert for
// i = n..1 the k-1 positions of i (1-based) into the path; the edges of
// all intermediate paths are the edges and diagonals of the partition.
// Requires a star-free sequence.
PolygonPartition partition_from_sequence(const StarSequence& s);

// The successive paths of the construction above, for inspection.
std::vector<std::vector<int>> construction_paths(const StarSequence& s);

// The two faces adjacent to d form a 2k-gon with vertices
// v_0 < ... < v_{2k-1}; d joins an opposite pair {v_{i-1}, v_{i-1+k}}
// and its size is that i (between 1 and k).
int diagonal_size(const PolygonPartition& p, std::pair<int, int> d);

// Replaces a diagonal of size i < k by the size-(i+1) diagonal of the
// same 2k-gon.  Throws std::domain_error at maximal size i = k.
PolygonPartition flip_up(const PolygonPartition& p, std::pair<int, int> d);

// All partitions with the given parameters, ordered by increasing-size
// flips.  Covers are exactly the single flips (the order is graded by
// the total of the diagonal sizes).  The number of partitions is capped
// (default 20000); exceeding the cap throws std::domain_error.
Poset tamari_order_partitions(int arity, int carets,
                              std::optional<long long> cap = std::nullopt);

// Leaf i of the tree is the boundary edge (i, i+1), the root is the root
// edge, and every other interior vertex spanning leaves [a, b] is the
// diagonal (a, b+1).  Requires a single tree.
PolygonPartition tree_to_partition(const ForestShape& t);
ForestShape partition_to_tree(const PolygonPartition& p);

// Graded product on sequences of partitions (trailing 2-gons implicit):
// the j-th leaf edge across the second sequence is inflated to the j-th
// partition of the first sequence, the glued root edges becoming
// diagonals.  Mirrors stacking of forests.
std::vector<PolygonPartition> glue(const std::vector<PolygonPartition>& first,
                                   const std::vector<PolygonPartition>& second);

// {"k": 2, "n": 3, "diagonals": [[0,2],[2,4]]}
std::string partition_json(const PolygonPartition& p);
PolygonPartition parse_partition_json(std::string_view text);

}  // namespace tamari
