#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

// A word in the free monoid on the letters x0, x1, x2, ...
// Only the sequence of subscripts is stored; the arity of the rewriting
// system it lives in is passed to the operations that need it.
class XWord {
public:
  XWord() = default;
  explicit XWord(std::vector<int> indices);

  // Accepts "x4 x1 x0" (whitespace-separated x-tokens) or the bare
  // comma-separated form "4,1,0".  An empty or blank string is the
  // empty word.
  static XWord parse(std::string_view text);

  std::string str() const;  // "x4 x1 x0"; empty string for the empty word

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  int index_at(std::size_t pos) const { return indices_[pos]; }
  const std::vector<int>& indices() const { return indices_; }

  friend bool operator==(const XWord&, const XWord&) = default;
  friend std::strong_ordering operator<=>(const XWord& a, const XWord& b);

private:
  std::vector<int> indices_;
};

XWord concat(const XWord& u, const XWord& v);

// Rewrites the letter pair at positions (pos, pos+1), 0-based.
// Up: x_i x_j -> x_{j+k-1} x_i, applicable when i < j.
// Down is the inverse: x_a x_b -> x_b x_{a-k+1}, applicable when a >= b+k.
// Both throw std::domain_error naming the position when not applicable.
XWord apply_rule_up(const XWord& w, int arity, std::size_t pos);
XWord apply_rule_down(const XWord& w, int arity, std::size_t pos);

bool is_top_normal(const XWord& w);               // indices non-increasing
bool is_bottom_normal(const XWord& w, int arity); // adjacent decreases < arity

// Normalization scans left to right and applies the first applicable rule,
// repeating until none applies.  Confluence makes the strategy irrelevant;
// this one is fixed so results are reproducible.
XWord top_normal_form(XWord w, int arity);
XWord bottom_normal_form(XWord w, int arity);

bool equivalent(const XWord& u, const XWord& v, int arity);

// Full congruence class of w, sorted lexicographically.  Classes are
// finite: both rules preserve length and the class is in bijection with
// the linearizations of a fixed forest.
std::vector<XWord> enumerate_class(const XWord& w, int arity);

// Membership in X_{k,n}: length n with 0 <= i_j <= (k-1)(n-j), j = 1..n.
bool is_inversion_word(const XWord& w, int arity, int n);

// An element of the monoid presented by the up/down relations, stored as
// the top normal form of any representative word.
class ThompsonElement {
public:
  explicit ThompsonElement(int arity);  // identity
  ThompsonElement(const XWord& representative, int arity);

  int arity() const { return arity_; }
  const XWord& canonical() const { return canonical_; }

  friend bool operator==(const ThompsonElement&, const ThompsonElement&) = default;

private:
  int arity_;
  XWord canonical_;
};

// Throws std::domain_error on arity mismatch.
ThompsonElement mul(const ThompsonElement& a, const ThompsonElement& b);

}  // namespace tamari
