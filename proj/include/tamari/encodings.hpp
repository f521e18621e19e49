#pragma once

#include <vector>

#include "tamari/forest.hpp"
#include "tamari/star_sequence.hpp"

namespace tamari {

// For a single binary tree: label the carets 1..n in in-order; entry i is
// the largest leaf label in the subtree rooted at caret i.  Two trees are
// equal iff their encodings are equal.
std::vector<int> huang_tamari_encoding(const ForestShape& t);

// For a permutation sigma (arity-2, star-free sequence): entry i counts
// the consecutive terms of sigma^{-1} following position i that are
// smaller than sigma^{-1}(i).  Equal encodings characterize equality of
// shape(tau(sigma^{-1})), i.e. the congruence pulled back along inversion.
std::vector<int> bjorner_wachs_encoding(const StarSequence& sigma);

}  // namespace tamari
