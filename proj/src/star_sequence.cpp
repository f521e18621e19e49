#include "tamari/star_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tamari {

namespace {

void validate_terms(int arity, int value_count, const std::vector<int>& terms) {
  std::vector<int> counts(static_cast<std::size_t>(value_count) + 1, 0);
  for (int t : terms) {
    if (t == kStar) continue;
    if (t < 1 || t > value_count)
      throw std::invalid_argument("sequence value " + std::to_string(t) + " out of range");
    ++counts[static_cast<std::size_t>(t)];
  }
  for (int v = 1; v <= value_count; ++v) {
    if (counts[static_cast<std::size_t>(v)] != arity - 1)
      throw std::invalid_argument("value " + std::to_string(v) + " must occur exactly " +
                                  std::to_string(arity - 1) + " times");
  }
  // Everything strictly between two occurrences of v must be concrete
  // and smaller than v; only then do v's positions bound a single caret.
  std::vector<std::size_t> first(static_cast<std::size_t>(value_count) + 1, 0);
  std::vector<std::size_t> last(static_cast<std::size_t>(value_count) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(value_count) + 1, false);
  for (std::size_t p = 0; p < terms.size(); ++p) {
    int t = terms[p];
    if (t == kStar) continue;
    auto v = static_cast<std::size_t>(t);
    if (!seen[v]) { first[v] = p; seen[v] = true; }
    last[v] = p;
  }
  for (int v = 1; v <= value_count; ++v) {
    auto u = static_cast<std::size_t>(v);
    for (std::size_t p = first[u] + 1; p < last[u]; ++p) {
      if (terms[p] == kStar || terms[p] > v)
        throw std::invalid_argument("value " + std::to_string(v) +
                                    " is split by a larger term at position " +
                                    std::to_string(p + 1));
    }
  }
}

}  // namespace

StarSequence::StarSequence(int arity) : arity_(arity), value_count_(0) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
}

StarSequence::StarSequence(int arity, std::vector<int> terms)
    : arity_(arity), terms_(std::move(terms)) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  while (!terms_.empty() && terms_.back() == kStar) terms_.pop_back();
  value_count_ = 0;
  for (int t : terms_) value_count_ = std::max(value_count_, t);
  validate_terms(arity_, value_count_, terms_);
}

StarSequence StarSequence::parse(int arity, std::string_view text) {
  std::vector<int> terms;
  bool spaced = text.find_first_of(" \t") != std::string_view::npos;
  if (spaced) {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      if (token == "*") {
        terms.push_back(kStar);
      } else {
        int value = 0;
        for (char c : token) {
          if (c < '0' || c > '9')
            throw std::invalid_argument("bad sequence token '" + token + "'");
          value = value * 10 + (c - '0');
        }
        terms.push_back(value);
      }
    }
  } else {
    for (char c : text) {
      if (c == '*') terms.push_back(kStar);
      else if (c >= '1' && c <= '9') terms.push_back(c - '0');
      else throw std::invalid_argument(std::string("bad sequence character '") + c + "'");
    }
  }
  return StarSequence(arity, std::move(terms));
}

std::string StarSequence::str() const {
  std::string out;
  for (std::size_t p = 0; p < terms_.size(); ++p) {
    if (p) out += ' ';
    if (terms_[p] == kStar) out += '*';
    else out += std::to_string(terms_[p]);
  }
  return out;
}

std::vector<std::size_t> StarSequence::positions_of(int value) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < terms_.size(); ++p)
    if (terms_[p] == value) out.push_back(p);
  return out;
}

std::strong_ordering operator<=>(const StarSequence& a, const StarSequence& b) {
  if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
}

XWord inversion_word(const StarSequence& s) {
  int n = s.value_count();
  std::vector<int> letters(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    auto positions = s.positions_of(v);
    int expected = -1;
    for (std::size_t occ = 0; occ < positions.size(); ++occ) {
      int larger = 0;
      for (std::size_t p = 0; p < positions[occ]; ++p) {
        int t = s.term_at(p);
        if (t == kStar || t > v) ++larger;
      }
      if (occ == 0) expected = larger;
      else if (larger != expected)
        throw std::logic_error("occurrences of " + std::to_string(v) +
                               " disagree on the inversion count");
    }
    letters[static_cast<std::size_t>(v - 1)] = expected;
  }
  return XWord(std::move(letters));
}

StarSequence sequence_from_word(const XWord& w, int arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  std::vector<int> slots;  // kStar = still open
  std::vector<std::size_t> open;  // indexes of open slots, ascending
  for (std::size_t j = 0; j < w.size(); ++j) {
    int skip = w.index_at(j);
    std::size_t need = static_cast<std::size_t>(skip) + static_cast<std::size_t>(arity - 1);
    while (open.size() < need) {
      open.push_back(slots.size());
      slots.push_back(kStar);
    }
    // fill open slots skip .. skip+arity-2 with value j+1
    for (int c = 0; c < arity - 1; ++c)
      slots[open[static_cast<std::size_t>(skip + c)]] = static_cast<int>(j) + 1;
    open.erase(open.begin() + skip, open.begin() + skip + (arity - 1));
  }
  return StarSequence(arity, std::move(slots));
}

StarSequence interlace(const StarSequence& lhs, const StarSequence& rhs) {
  if (lhs.arity() != rhs.arity())
    throw std::domain_error("arity mismatch: " + std::to_string(lhs.arity()) + " vs " +
                            std::to_string(rhs.arity()));
  int lift = lhs.value_count();
  std::vector<int> terms = lhs.terms();
  std::size_t star_cursor = 0;  // scans star positions of lhs, then the tail
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    while (star_cursor < terms.size() && terms[star_cursor] != kStar) ++star_cursor;
    if (star_cursor == terms.size()) terms.push_back(kStar);
    int t = rhs.term_at(i);
    if (t != kStar) terms[star_cursor] = t + lift;
    ++star_cursor;
  }
  return StarSequence(lhs.arity(), std::move(terms));
}

namespace {

// Occurrence scan shared by the four patterns: positions a < b < c with
// concrete outer terms; the middle term may be a star (larger than all).
// In every pattern the middle term must exceed both outer terms.
template <typename Cond>
bool occurs(const StarSequence& s, Cond&& cond) {
  std::size_t z = s.size();
  for (std::size_t a = 0; a < z; ++a) {
    int va = s.term_at(a);
    if (va == kStar) continue;
    for (std::size_t c = a + 2; c < z; ++c) {
      int vc = s.term_at(c);
      if (vc == kStar) continue;
      if (!cond(va, vc)) continue;
      int big = std::max(va, vc);
      for (std::size_t b = a + 1; b < c; ++b) {
        int mid = s.term_at(b);
        if (mid == kStar || mid > big) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool occurs_132(const StarSequence& s) {
  return occurs(s, [](int a, int c) { return a < c; });
}

bool occurs_overline_132(const StarSequence& s) {
  return occurs(s, [](int a, int c) { return a + 1 == c; });
}

bool occurs_231(const StarSequence& s) {
  return occurs(s, [](int a, int c) { return c < a; });
}

bool occurs_overline_231(const StarSequence& s) {
  return occurs(s, [](int a, int c) { return c + 1 == a; });
}

StarSequence transpose(const StarSequence& s, int value) {
  if (value < 1 || value + 1 > s.value_count())
    throw std::invalid_argument("transposed value " + std::to_string(value) + " out of range");
  std::vector<int> terms = s.terms();
  for (int& t : terms) {
    if (t == value) t = value + 1;
    else if (t == value + 1) t = value;
  }
  try {
    return StarSequence(s.arity(), std::move(terms));
  } catch (const std::invalid_argument& e) {
    throw std::domain_error("transposing " + std::to_string(value) + " breaks the sequence: " +
                            e.what());
  }
}

bool preserves_forest(const StarSequence& s, int value) {
  if (value < 1 || value + 1 > s.value_count())
    throw std::invalid_argument("transposed value " + std::to_string(value) + " out of range");
  auto lo = s.positions_of(value);
  auto hi = s.positions_of(value + 1);
  std::size_t from, to;
  if (lo.back() < hi.front()) {
    from = lo.back(); to = hi.front();
  } else if (hi.back() < lo.front()) {
    from = hi.back(); to = lo.front();
  } else {
    return false;  // nested occurrences: the values are comparable in the forest
  }
  for (std::size_t p = from + 1; p < to; ++p) {
    int t = s.term_at(p);
    if (t == kStar || t > value + 1) return true;
  }
  return false;
}

StarSequence flatten(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("flatten requires distinct values");
  std::vector<int> ranked;
  ranked.reserve(values.size());
  for (int v : values) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    ranked.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return StarSequence(2, std::move(ranked));
}

BlockPattern::BlockPattern(int leading, std::vector<int> blocks, std::vector<int> gaps)
    : leading_(leading), blocks_(std::move(blocks)), gaps_(std::move(gaps)) {
  if (leading_ < 0) throw std::invalid_argument("negative leading star count");
  if (!blocks_.empty() && gaps_.size() != blocks_.size() - 1)
    throw std::invalid_argument("need exactly one gap between consecutive blocks");
  if (blocks_.empty() && !gaps_.empty())
    throw std::invalid_argument("gaps without blocks");
  if (blocks_.empty() && leading_ != 0)
    throw std::invalid_argument("trailing stars are not part of a pattern");
  for (int b : blocks_)
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
  for (int g : gaps_)
    if (g < 1) throw std::invalid_argument("gap lengths must be positive");
}

BlockPattern BlockPattern::parse(std::string_view text) {
  std::vector<char> slots;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == '_' || c == '*') slots.push_back(c);
    else throw std::invalid_argument(std::string("bad pattern character '") + c + "'");
  }
  while (!slots.empty() && slots.back() == '*') slots.pop_back();
  int leading = 0;
  std::size_t p = 0;
  while (p < slots.size() && slots[p] == '*') { ++leading; ++p; }
  std::vector<int> blocks, gaps;
  while (p < slots.size()) {
    int run = 0;
    while (p < slots.size() && slots[p] == '_') { ++run; ++p; }
    blocks.push_back(run);
    if (p < slots.size()) {
      int gap = 0;
      while (p < slots.size() && slots[p] == '*') { ++gap; ++p; }
      if (p < slots.size()) gaps.push_back(gap);
    }
  }
  if (blocks.empty()) return BlockPattern(0, {}, {});
  return BlockPattern(leading, std::move(blocks), std::move(gaps));
}

std::string BlockPattern::str() const {
  std::string out;
  auto put = [&out](char c, int count) {
    for (int i = 0; i < count; ++i) {
      if (!out.empty()) out += ' ';
      out += c;
    }
  };
  put('*', leading_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) put('*', gaps_[b - 1]);
    put('_', blocks_[b]);
  }
  return out;
}

int BlockPattern::value_count() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

int BlockPattern::slot_count() const {
  int total = leading_ + value_count();
  return std::accumulate(gaps_.begin(), gaps_.end(), total);
}

bool BlockPattern::has_stars() const { return leading_ > 0 || !gaps_.empty(); }

std::vector<int> BlockPattern::concrete_slots() const {
  std::vector<int> out;
  int at = leading_;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) at += gaps_[b - 1];
    for (int i = 0; i < blocks_[b]; ++i) out.push_back(at++);
  }
  return out;
}

std::vector<StarSequence> sequences_with_pattern(const BlockPattern& pattern) {
  int n = pattern.value_count();
  std::vector<int> slots = pattern.concrete_slots();
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::vector<StarSequence> out;
  std::vector<int> terms(static_cast<std::size_t>(pattern.slot_count()), kStar);
  do {
    for (std::size_t i = 0; i < slots.size(); ++i)
      terms[static_cast<std::size_t>(slots[i])] = values[i];
    out.push_back(StarSequence(2, terms));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace tamari
