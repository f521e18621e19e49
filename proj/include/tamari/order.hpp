#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamari/star_sequence.hpp"

namespace tamari {

// Hasse diagram edge, lower covered by upper.  transposed_value is the
// value i such that upper = transpose(lower, i), or -1 when the poset
// does not come from transpositions.
struct CoverEdge {
  int lower = 0;
  int upper = 0;
  int transposed_value = -1;
};

// Finite poset given by its elements (canonical text labels) and an
// irredundant cover list.  All posets built here are graded, so the
// cover lists are transitively reduced by construction.
struct Poset {
  std::vector<std::string> elements;
  std::vector<CoverEdge> covers;
};

struct CongruenceClassification {
  std::vector<int> class_of;  // element index -> class id
  std::vector<int> bottoms;   // class id -> element index of the bottom
  std::vector<int> tops;      // class id -> element index of the top
  int class_count() const { return static_cast<int>(bottoms.size()); }
};

struct LatticeReport {
  bool is_lattice = true;
  // On failure: the offending pair and whether the join or meet is missing.
  std::optional<std::pair<int, int>> witness;
  bool join_failed = false;
};

// Left weak order on the fillings of the pattern: sigma is covered by
// transpose(sigma, i) whenever i sits left of i+1.  Elements are indexed
// in lexicographic order of their term vectors.  The cap (default 8
// without stars, 6 with) bounds the concrete value count; exceeding it
// throws std::domain_error.
Poset weak_bruhat(const BlockPattern& pattern,
                  std::optional<int> cap = std::nullopt);

// Comparison in the weak order: containment of value-inversion sets.
// Requires equal patterns.
bool weak_order_leq(const StarSequence& a, const StarSequence& b);

// Connected components of the forest-preserving covers of a weak_bruhat
// poset.  Verifies that every class is the full interval between its
// unique bottom (231-avoiding) and top (132-avoiding) and that classes
// coincide with equality of forest shapes; a violation means the
// implementation is broken and throws std::logic_error.
CongruenceClassification classify(const Poset& p);

// Greedy endpoint computation on a single sequence, no poset needed:
// repeatedly apply forest-preserving transpositions upward (downward).
StarSequence class_top(const StarSequence& s);
StarSequence class_bottom(const StarSequence& s);

// Quotient poset; elements are labeled by their top representatives and
// ordered by class id (id = order of first appearance in p).
Poset quotient(const Poset& p, const CongruenceClassification& c);

LatticeReport is_lattice(const Poset& p);

// Checks that flattening each block induces a lattice isomorphism
// between the quotient over the pattern and the product of the
// single-block quotients.
bool product_check(const BlockPattern& pattern);

// DOT rendering, edges lower -> upper.  With a classification,
// intra-class covers are solid and inter-class covers dashed.
std::string hasse_dot(const Poset& p,
                      const CongruenceClassification* cls = nullptr);

// {"elements": [...], "covers": [[l,u],...], "classes": [...]?}
std::string poset_json(const Poset& p,
                       const CongruenceClassification* cls = nullptr);

}  // namespace tamari
