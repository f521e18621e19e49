#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamari/xword.hpp"

namespace tamari {

// Star placeholder inside a sequence.  Stars compare larger than every
// concrete value in all pattern and inversion computations.
inline constexpr int kStar = 0;

// A sequence over {1..n, *} in which every value 1..n occurs exactly
// arity-1 times.  Stored in canonical form: trailing stars trimmed, so
// size() is the position (1-based count) of the last concrete term.
//
// Validity for arity >= 3 additionally requires that every term strictly
// between two occurrences of a value j is concrete and smaller than j;
// this is exactly the condition for the k-1 occurrences of j to be the
// gaps of a single k-ary caret.
class StarSequence {
public:
  explicit StarSequence(int arity);
  StarSequence(int arity, std::vector<int> terms);

  // Whitespace-separated tokens ("3 2 * 4 1"), or the compact form
  // ("32*41") when every value is below 10.
  static StarSequence parse(int arity, std::string_view text);

  std::string str() const;  // always the spaced form

  int arity() const { return arity_; }
  int value_count() const { return value_count_; }  // n
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int term_at(std::size_t pos) const { return terms_[pos]; }  // 0-based
  const std::vector<int>& terms() const { return terms_; }

  // 0-based positions of all occurrences of value, ascending.
  std::vector<std::size_t> positions_of(int value) const;

  friend bool operator==(const StarSequence&, const StarSequence&) = default;
  friend std::strong_ordering operator<=>(const StarSequence&, const StarSequence&);

private:
  int arity_;
  int value_count_;
  std::vector<int> terms_;
};

// Letter j of the result is the number of terms left of the first
// occurrence of j that exceed j, stars counting as larger.  For
// arity >= 3 every occurrence of j yields the same count.
XWord inversion_word(const StarSequence& s);

// Slot placement, inverse of inversion_word: for j = 1..n, skip the first
// i_j open slots and fill the next arity-1 open slots with j, extending
// the slot array as needed.  Unfilled slots become stars.
StarSequence sequence_from_word(const XWord& w, int arity);

// Graded product: lift rhs values by lhs.value_count() and write the i-th
// term of rhs into the i-th star position of lhs (positions past lhs's
// end count as stars).
StarSequence interlace(const StarSequence& lhs, const StarSequence& rhs);

// Pattern occurrences at positions a < b < c within the stored terms.
// The outer terms must be concrete; the middle one may be a star.
bool occurs_132(const StarSequence& s);           // s(a) < s(c) < s(b)
bool occurs_overline_132(const StarSequence& s);  // s(a)+1 = s(c) < s(b)
bool occurs_231(const StarSequence& s);           // s(c) < s(a) < s(b)
bool occurs_overline_231(const StarSequence& s);  // s(c)+1 = s(a) < s(b)

// Exchanges every occurrence of value with value+1.  Throws
// std::domain_error if the exchange breaks sequence validity.
StarSequence transpose(const StarSequence& s, int value);

// True iff some term strictly between the occurrences of value and of
// value+1 exceeds value+1 (stars count as larger); equivalently the
// transposition does not change the underlying forest.  False when the
// occurrences are not separated.
bool preserves_forest(const StarSequence& s, int value);

// Ranks distinct values into a permutation of 1..m (arity 2, no stars).
StarSequence flatten(std::span<const int> values);

// Positions of the stars in a ground set of sequences: a possibly empty
// leading star run, then concrete blocks separated by star gaps.
class BlockPattern {
public:
  BlockPattern(int leading, std::vector<int> blocks, std::vector<int> gaps);

  // "_ _ * _" or compact "__*_"; '_' marks a concrete slot.  Trailing
  // stars are dropped (canonical form ignores them).
  static BlockPattern parse(std::string_view text);

  std::string str() const;

  int value_count() const;  // total concrete slots
  int slot_count() const;   // length including interior/leading stars
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int leading() const { return leading_; }
  bool has_stars() const;

  // 0-based slot indexes of the concrete positions, ascending.
  std::vector<int> concrete_slots() const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

private:
  int leading_;
  std::vector<int> blocks_;
  std::vector<int> gaps_;  // gaps_[i] sits between blocks_[i] and blocks_[i+1]
};

// All n! fillings of the pattern with values 1..n, in lexicographic order
// of the term vectors (arity 2).
std::vector<StarSequence> sequences_with_pattern(const BlockPattern& pattern);

}  // namespace tamari
