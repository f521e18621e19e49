#include "tamari/xword.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tamari {

namespace {

void check_arity(int arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
}

[[noreturn]] void bad_token(std::string_view token) {
  throw std::invalid_argument("bad word token '" + std::string(token) + "'");
}

int parse_subscript(std::string_view token) {
  if (token.empty()) bad_token(token);
  int value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') bad_token(token);
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw std::invalid_argument("letter index too large");
  }
  return value;
}

}  // namespace

XWord::XWord(std::vector<int> indices) : indices_(std::move(indices)) {
  for (int i : indices_) {
    if (i < 0) throw std::invalid_argument("letter index must be nonnegative");
  }
}

XWord XWord::parse(std::string_view text) {
  std::vector<int> indices;
  if (text.find(',') != std::string_view::npos) {
    // comma-separated bare subscripts
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      std::string_view sv(item);
      while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
      while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
      indices.push_back(parse_subscript(sv));
    }
    return XWord(std::move(indices));
  }
  std::istringstream in{std::string(text)};
  std::string token;
  bool saw_x = false, saw_bare = false;
  while (in >> token) {
    if (token.front() == 'x') {
      saw_x = true;
      indices.push_back(parse_subscript(std::string_view(token).substr(1)));
    } else {
      saw_bare = true;
      indices.push_back(parse_subscript(token));
    }
  }
  if (saw_x && saw_bare)
    throw std::invalid_argument("mixed word token forms");
  if (saw_bare && indices.size() > 1)
    throw std::invalid_argument("bare subscripts must be comma-separated");
  return XWord(std::move(indices));
}

std::string XWord::str() const {
  std::string out;
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (j) out += ' ';
    out += 'x';
    out += std::to_string(indices_[j]);
  }
  return out;
}

std::strong_ordering operator<=>(const XWord& a, const XWord& b) {
  return std::lexicographical_compare_three_way(
      a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end());
}

XWord concat(const XWord& u, const XWord& v) {
  std::vector<int> joined = u.indices();
  joined.insert(joined.end(), v.indices().begin(), v.indices().end());
  return XWord(std::move(joined));
}

XWord apply_rule_up(const XWord& w, int arity, std::size_t pos) {
  check_arity(arity);
  if (pos + 1 >= w.size())
    throw std::domain_error("no letter pair at position " + std::to_string(pos));
  int i = w.index_at(pos), j = w.index_at(pos + 1);
  if (i >= j)
    throw std::domain_error("up rule not applicable at position " + std::to_string(pos) +
                            ": x" + std::to_string(i) + " x" + std::to_string(j));
  std::vector<int> out = w.indices();
  out[pos] = j + arity - 1;
  out[pos + 1] = i;
  return XWord(std::move(out));
}

XWord apply_rule_down(const XWord& w, int arity, std::size_t pos) {
  check_arity(arity);
  if (pos + 1 >= w.size())
    throw std::domain_error("no letter pair at position " + std::to_string(pos));
  int a = w.index_at(pos), b = w.index_at(pos + 1);
  if (a < b + arity)
    throw std::domain_error("down rule not applicable at position " + std::to_string(pos) +
                            ": x" + std::to_string(a) + " x" + std::to_string(b));
  std::vector<int> out = w.indices();
  out[pos] = b;
  out[pos + 1] = a - arity + 1;
  return XWord(std::move(out));
}

bool is_top_normal(const XWord& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w.index_at(p) < w.index_at(p + 1)) return false;
  return true;
}

bool is_bottom_normal(const XWord& w, int arity) {
  check_arity(arity);
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w.index_at(p) >= w.index_at(p + 1) + arity) return false;
  return true;
}

XWord top_normal_form(XWord w, int arity) {
  check_arity(arity);
  std::vector<int> v = w.indices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      if (v[p] < v[p + 1]) {
        int i = v[p];
        v[p] = v[p + 1] + arity - 1;
        v[p + 1] = i;
        changed = true;
        break;
      }
    }
  }
  return XWord(std::move(v));
}

XWord bottom_normal_form(XWord w, int arity) {
  check_arity(arity);
  std::vector<int> v = w.indices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      if (v[p] >= v[p + 1] + arity) {
        int a = v[p];
        v[p] = v[p + 1];
        v[p + 1] = a - arity + 1;
        changed = true;
        break;
      }
    }
  }
  return XWord(std::move(v));
}

bool equivalent(const XWord& u, const XWord& v, int arity) {
  return top_normal_form(u, arity) == top_normal_form(v, arity);
}

std::vector<XWord> enumerate_class(const XWord& w, int arity) {
  check_arity(arity);
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> todo;
  seen.insert(w.indices());
  todo.push(w.indices());
  while (!todo.empty()) {
    std::vector<int> cur = std::move(todo.front());
    todo.pop();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] < cur[p + 1]) {
        std::vector<int> next = cur;
        next[p] = cur[p + 1] + arity - 1;
        next[p + 1] = cur[p];
        if (seen.insert(next).second) todo.push(std::move(next));
      }
      if (cur[p] >= cur[p + 1] + arity) {
        std::vector<int> next = cur;
        next[p] = cur[p + 1];
        next[p + 1] = cur[p] - arity + 1;
        if (seen.insert(next).second) todo.push(std::move(next));
      }
    }
  }
  std::vector<XWord> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(XWord(v));
  return out;  // std::set iterates lexicographically
}

bool is_inversion_word(const XWord& w, int arity, int n) {
  check_arity(arity);
  if (n < 0 || w.size() != static_cast<std::size_t>(n)) return false;
  for (int j = 1; j <= n; ++j) {
    int bound = (arity - 1) * (n - j);
    int idx = w.index_at(static_cast<std::size_t>(j - 1));
    if (idx < 0 || idx > bound) return false;
  }
  return true;
}

ThompsonElement::ThompsonElement(int arity) : arity_(arity) { check_arity(arity); }

ThompsonElement::ThompsonElement(const XWord& representative, int arity)
    : arity_(arity), canonical_(top_normal_form(representative, arity)) {}

ThompsonElement mul(const ThompsonElement& a, const ThompsonElement& b) {
  if (a.arity() != b.arity())
    throw std::domain_error("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                            std::to_string(b.arity()));
  return ThompsonElement(concat(a.canonical(), b.canonical()), a.arity());
}

}  // namespace tamari
