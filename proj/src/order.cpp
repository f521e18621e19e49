#include "tamari/order.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "tamari/forest.hpp"

namespace tamari {

namespace {

// Inversion set over the concrete slots: bit for each slot pair (i, j),
// i < j, holding a larger value before a smaller one.  Containment of
// these sets is the left weak order (stars are inert).
std::uint64_t inversion_mask(const StarSequence& s) {
  std::vector<int> vals;
  for (int t : s.terms())
    if (t != kStar) vals.push_back(t);
  int n = static_cast<int>(vals.size());
  if (n > 11) throw std::domain_error("sequence too long for inversion masks");
  std::uint64_t mask = 0;
  int id = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++id) {
      if (vals[static_cast<std::size_t>(i)] > vals[static_cast<std::size_t>(j)])
        mask |= std::uint64_t(1) << id;
    }
  }
  return mask;
}

bool same_pattern(const StarSequence& a, const StarSequence& b) {
  if (a.arity() != b.arity() || a.size() != b.size()) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if ((a.term_at(p) == kStar) != (b.term_at(p) == kStar)) return false;
  }
  return true;
}

struct Bits {
  int words = 0;
  std::vector<std::uint64_t> data;  // rows of `words` words
  Bits(int rows, int bits) : words((bits + 63) / 64) {
    data.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words), 0);
  }
  std::uint64_t* row(int r) {
    return data.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(words);
  }
  const std::uint64_t* row(int r) const {
    return data.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(words);
  }
  void set(int r, int bit) { row(r)[bit / 64] |= std::uint64_t(1) << (bit % 64); }
  bool get(int r, int bit) const {
    return (row(r)[bit / 64] >> (bit % 64)) & 1u;
  }
  void or_row(int dst, int src) {
    for (int w = 0; w < words; ++w) row(dst)[w] |= row(src)[w];
  }
};

// Topological order of 0..n-1 under the given edges; throws if cyclic.
std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    succ[static_cast<std::size_t>(a)].push_back(b);
    ++indeg[static_cast<std::size_t>(b)];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("cover relation contains a cycle");
  return order;
}

// Strict reachability closure: reach.get(a, b) iff a < b.
Bits reach_closure(int n, const std::vector<std::pair<int, int>>& edges) {
  Bits reach(n, n);
  auto order = topo_order(n, edges);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) succ[static_cast<std::size_t>(a)].push_back(b);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int w : succ[static_cast<std::size_t>(*it)]) {
      reach.set(*it, w);
      reach.or_row(*it, w);
    }
  }
  return reach;
}

}  // namespace

Poset weak_bruhat(const BlockPattern& pattern, std::optional<int> cap) {
  int n = pattern.value_count();
  int limit = cap.value_or(pattern.has_stars() ? 6 : 8);
  if (n > limit)
    throw std::domain_error("pattern has " + std::to_string(n) +
                            " values, enumeration cap is " + std::to_string(limit));
  std::vector<StarSequence> seqs = sequences_with_pattern(pattern);
  Poset p;
  p.elements.reserve(seqs.size());
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    p.elements.push_back(seqs[i].str());
    index.emplace(p.elements.back(), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (int v = 1; v < n; ++v) {
      auto lo = seqs[i].positions_of(v);
      auto hi = seqs[i].positions_of(v + 1);
      if (lo.back() < hi.front()) {
        StarSequence up = transpose(seqs[i], v);
        p.covers.push_back({static_cast<int>(i), index.at(up.str()), v});
      }
    }
  }
  return p;
}

bool weak_order_leq(const StarSequence& a, const StarSequence& b) {
  if (a.arity() != 2 || b.arity() != 2)
    throw std::invalid_argument("weak order is defined on arity-2 sequences");
  if (!same_pattern(a, b))
    throw std::invalid_argument("weak order compares fillings of one pattern");
  std::uint64_t ma = inversion_mask(a);
  std::uint64_t mb = inversion_mask(b);
  return (ma & ~mb) == 0;
}

CongruenceClassification classify(const Poset& p) {
  int n_elems = static_cast<int>(p.elements.size());
  std::vector<StarSequence> seqs;
  seqs.reserve(p.elements.size());
  for (const std::string& label : p.elements)
    seqs.push_back(StarSequence::parse(2, label));
  std::vector<std::uint64_t> masks;
  masks.reserve(seqs.size());
  for (const StarSequence& s : seqs) masks.push_back(inversion_mask(s));

  std::vector<int> parent(static_cast<std::size_t>(n_elems));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const CoverEdge& e : p.covers) {
    if (e.transposed_value <= 0)
      throw std::invalid_argument("classification needs transposition covers");
    if (preserves_forest(seqs[static_cast<std::size_t>(e.lower)], e.transposed_value))
      parent[static_cast<std::size_t>(find(e.lower))] = find(e.upper);
  }

  CongruenceClassification c;
  c.class_of.assign(static_cast<std::size_t>(n_elems), -1);
  std::unordered_map<int, int> id_of_root;
  std::vector<std::vector<int>> members;
  for (int e = 0; e < n_elems; ++e) {
    int root = find(e);
    auto [it, fresh] = id_of_root.emplace(root, static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    c.class_of[static_cast<std::size_t>(e)] = it->second;
    members[static_cast<std::size_t>(it->second)].push_back(e);
  }

  // Post conditions.  These hold by construction of the congruence, so a
  // failure is a bug in this library rather than in the caller's data.
  std::unordered_map<std::string, int> shape_class;
  std::vector<std::string> class_shape(members.size());
  std::vector<char> shape_seen(members.size(), 0);
  for (int e = 0; e < n_elems; ++e) {
    std::string sh = shape(tau(seqs[static_cast<std::size_t>(e)])).str();
    std::size_t cid = static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(e)]);
    if (!shape_seen[cid]) {
      shape_seen[cid] = 1;
      class_shape[cid] = sh;
    } else if (class_shape[cid] != sh) {
      throw std::logic_error("class mixes forest shapes at " +
                             p.elements[static_cast<std::size_t>(e)]);
    }
    auto [it, fresh] = shape_class.emplace(sh, static_cast<int>(cid));
    if (it->second != static_cast<int>(cid))
      throw std::logic_error("two classes share the forest shape of " +
                             p.elements[static_cast<std::size_t>(e)]);
  }

  c.bottoms.assign(members.size(), -1);
  c.tops.assign(members.size(), -1);
  for (std::size_t cid = 0; cid < members.size(); ++cid) {
    const std::vector<int>& elems = members[cid];
    int bot = elems.front(), top = elems.front();
    for (int e : elems) {
      if (std::popcount(masks[static_cast<std::size_t>(e)]) <
          std::popcount(masks[static_cast<std::size_t>(bot)]))
        bot = e;
      if (std::popcount(masks[static_cast<std::size_t>(e)]) >
          std::popcount(masks[static_cast<std::size_t>(top)]))
        top = e;
    }
    std::uint64_t mb = masks[static_cast<std::size_t>(bot)];
    std::uint64_t mt = masks[static_cast<std::size_t>(top)];
    for (int e : elems) {
      std::uint64_t m = masks[static_cast<std::size_t>(e)];
      if ((mb & ~m) != 0 || (m & ~mt) != 0)
        throw std::logic_error("class of " +
                               p.elements[static_cast<std::size_t>(e)] +
                               " has no unique bottom and top");
    }
    if (occurs_231(seqs[static_cast<std::size_t>(bot)]))
      throw std::logic_error("class bottom " +
                             p.elements[static_cast<std::size_t>(bot)] +
                             " contains a 231 pattern");
    if (occurs_132(seqs[static_cast<std::size_t>(top)]))
      throw std::logic_error("class top " +
                             p.elements[static_cast<std::size_t>(top)] +
                             " contains a 132 pattern");
    c.bottoms[cid] = bot;
    c.tops[cid] = top;
  }

  // Interval completeness: everything between a bottom and its top
  // belongs to the class.
  for (std::size_t cid = 0; cid < members.size(); ++cid) {
    std::uint64_t mb = masks[static_cast<std::size_t>(c.bottoms[cid])];
    std::uint64_t mt = masks[static_cast<std::size_t>(c.tops[cid])];
    for (int e = 0; e < n_elems; ++e) {
      std::uint64_t m = masks[static_cast<std::size_t>(e)];
      if ((mb & ~m) == 0 && (m & ~mt) == 0 &&
          c.class_of[static_cast<std::size_t>(e)] != static_cast<int>(cid))
        throw std::logic_error("element " + p.elements[static_cast<std::size_t>(e)] +
                               " falls inside a foreign class interval");
    }
  }
  return c;
}

StarSequence class_top(const StarSequence& s) {
  StarSequence cur = s;
  int n = cur.value_count();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 1; v < n; ++v) {
      auto lo = cur.positions_of(v);
      auto hi = cur.positions_of(v + 1);
      if (lo.back() < hi.front() && preserves_forest(cur, v)) {
        cur = transpose(cur, v);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

StarSequence class_bottom(const StarSequence& s) {
  StarSequence cur = s;
  int n = cur.value_count();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 1; v < n; ++v) {
      auto lo = cur.positions_of(v);
      auto hi = cur.positions_of(v + 1);
      if (hi.back() < lo.front() && preserves_forest(cur, v)) {
        cur = transpose(cur, v);
        moved = true;
        break;
      }
    }
  }
  return cur;
}

Poset quotient(const Poset& p, const CongruenceClassification& c) {
  int m = c.class_count();
  std::set<std::pair<int, int>> cand;
  for (const CoverEdge& e : p.covers) {
    int a = c.class_of[static_cast<std::size_t>(e.lower)];
    int b = c.class_of[static_cast<std::size_t>(e.upper)];
    if (a != b) cand.insert({a, b});
  }
  std::vector<std::pair<int, int>> edges(cand.begin(), cand.end());
  Bits reach = reach_closure(m, edges);
  Poset q;
  q.elements.reserve(static_cast<std::size_t>(m));
  for (int cid = 0; cid < m; ++cid)
    q.elements.push_back(p.elements[static_cast<std::size_t>(c.tops[static_cast<std::size_t>(cid)])]);
  for (auto [a, b] : edges) {
    bool redundant = false;
    for (auto [a2, mid] : edges) {
      if (a2 == a && mid != b && reach.get(mid, b)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) q.covers.push_back({a, b, -1});
  }
  return q;
}

LatticeReport is_lattice(const Poset& p) {
  int n = static_cast<int>(p.elements.size());
  if (n > 20000) throw std::domain_error("poset too large for the lattice check");
  LatticeReport report;
  if (n == 0) return report;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(p.covers.size());
  for (const CoverEdge& e : p.covers) edges.push_back({e.lower, e.upper});
  std::vector<int> order = topo_order(n, edges);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

  // above/below rows indexed by element, bits by topo rank
  Bits above(n, n), below(n, n);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n)),
      pred(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    succ[static_cast<std::size_t>(a)].push_back(b);
    pred[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    above.set(v, rank[static_cast<std::size_t>(v)]);
    for (int w : succ[static_cast<std::size_t>(v)]) above.or_row(v, w);
  }
  for (int v_rank = 0; v_rank < n; ++v_rank) {
    int v = order[static_cast<std::size_t>(v_rank)];
    below.set(v, rank[static_cast<std::size_t>(v)]);
    for (int w : pred[static_cast<std::size_t>(v)]) below.or_row(v, w);
  }

  int words = above.words;
  std::vector<std::uint64_t> buf(static_cast<std::size_t>(words));
  auto check_pair = [&](int x, int y, const Bits& dir, bool take_min) -> bool {
    const std::uint64_t* rx = dir.row(x);
    const std::uint64_t* ry = dir.row(y);
    int candidate_rank = -1;
    if (take_min) {
      for (int w = 0; w < words; ++w) {
        buf[static_cast<std::size_t>(w)] = rx[w] & ry[w];
        if (candidate_rank < 0 && buf[static_cast<std::size_t>(w)] != 0)
          candidate_rank = w * 64 + std::countr_zero(buf[static_cast<std::size_t>(w)]);
      }
    } else {
      for (int w = words - 1; w >= 0; --w) {
        buf[static_cast<std::size_t>(w)] = rx[w] & ry[w];
        if (candidate_rank < 0 && buf[static_cast<std::size_t>(w)] != 0)
          candidate_rank = w * 64 + 63 - std::countl_zero(buf[static_cast<std::size_t>(w)]);
      }
    }
    if (candidate_rank < 0) return false;
    const std::uint64_t* rz = dir.row(order[static_cast<std::size_t>(candidate_rank)]);
    for (int w = 0; w < words; ++w)
      if ((buf[static_cast<std::size_t>(w)] & ~rz[w]) != 0) return false;
    return true;
  };

  for (int x = 0; x < n && report.is_lattice; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!check_pair(x, y, above, true)) {
        report = {false, std::make_pair(x, y), true};
        break;
      }
      if (!check_pair(x, y, below, false)) {
        report = {false, std::make_pair(x, y), false};
        break;
      }
    }
  }
  return report;
}

bool product_check(const BlockPattern& pattern) {
  Poset p = weak_bruhat(pattern);
  CongruenceClassification c = classify(p);
  int m = c.class_count();
  std::set<std::pair<int, int>> cand;
  for (const CoverEdge& e : p.covers) {
    int a = c.class_of[static_cast<std::size_t>(e.lower)];
    int b = c.class_of[static_cast<std::size_t>(e.upper)];
    if (a != b) cand.insert({a, b});
  }
  std::vector<std::pair<int, int>> edges(cand.begin(), cand.end());
  Bits reach = reach_closure(m, edges);
  auto leq = [&](int a, int b) { return a == b || reach.get(a, b); };

  struct Factor {
    CongruenceClassification cls;
    Bits reach{0, 0};
    std::unordered_map<std::string, int> index;
  };
  std::vector<Factor> factors;
  for (int size : pattern.blocks()) {
    BlockPattern block(0, {size}, {});
    Poset fp = weak_bruhat(block);
    Factor f;
    f.cls = classify(fp);
    std::set<std::pair<int, int>> fcand;
    for (const CoverEdge& e : fp.covers) {
      int a = f.cls.class_of[static_cast<std::size_t>(e.lower)];
      int b = f.cls.class_of[static_cast<std::size_t>(e.upper)];
      if (a != b) fcand.insert({a, b});
    }
    std::vector<std::pair<int, int>> fedges(fcand.begin(), fcand.end());
    f.reach = reach_closure(f.cls.class_count(), fedges);
    for (std::size_t i = 0; i < fp.elements.size(); ++i)
      f.index.emplace(fp.elements[i], static_cast<int>(i));
    factors.push_back(std::move(f));
  }
  auto factor_leq = [&](std::size_t i, int a, int b) {
    return a == b || factors[i].reach.get(a, b);
  };

  // Tuple of factor classes for each element, by flattening each block.
  std::vector<int> slots = pattern.concrete_slots();
  const std::vector<int>& blocks = pattern.blocks();
  std::vector<std::vector<int>> tuple_of(p.elements.size());
  for (std::size_t e = 0; e < p.elements.size(); ++e) {
    StarSequence s = StarSequence::parse(2, p.elements[e]);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::vector<int> vals;
      for (int t = 0; t < blocks[i]; ++t)
        vals.push_back(s.term_at(static_cast<std::size_t>(slots[offset + static_cast<std::size_t>(t)])));
      offset += static_cast<std::size_t>(blocks[i]);
      StarSequence flat = flatten(vals);
      int idx = factors[i].index.at(flat.str());
      tuple_of[e].push_back(factors[i].cls.class_of[static_cast<std::size_t>(idx)]);
    }
  }

  // The map must be constant on classes, bijective onto the product, and
  // an order isomorphism.
  std::vector<std::vector<int>> class_tuple(static_cast<std::size_t>(m));
  for (std::size_t e = 0; e < p.elements.size(); ++e) {
    int cid = c.class_of[e];
    if (class_tuple[static_cast<std::size_t>(cid)].empty())
      class_tuple[static_cast<std::size_t>(cid)] = tuple_of[e];
    else if (class_tuple[static_cast<std::size_t>(cid)] != tuple_of[e])
      return false;
  }
  std::set<std::vector<int>> distinct(class_tuple.begin(), class_tuple.end());
  long long product_size = 1;
  for (const Factor& f : factors) product_size *= f.cls.class_count();
  if (static_cast<long long>(distinct.size()) != product_size ||
      static_cast<long long>(m) != product_size)
    return false;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      bool lhs = leq(a, b);
      bool rhs = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factor_leq(i, class_tuple[static_cast<std::size_t>(a)][i],
                        class_tuple[static_cast<std::size_t>(b)][i])) {
          rhs = false;
          break;
        }
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace {

std::string dot_escape(const std::string& label) {
  std::string out;
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string hasse_dot(const Poset& p, const CongruenceClassification* cls) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(p.elements[i]) +
           "\"];\n";
  }
  for (const CoverEdge& e : p.covers) {
    out += "  n" + std::to_string(e.lower) + " -> n" + std::to_string(e.upper);
    if (cls != nullptr) {
      bool same = cls->class_of[static_cast<std::size_t>(e.lower)] ==
                  cls->class_of[static_cast<std::size_t>(e.upper)];
      out += same ? " [style=solid]" : " [style=dashed]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string poset_json(const Poset& p, const CongruenceClassification* cls) {
  nlohmann::json j;
  j["elements"] = p.elements;
  nlohmann::json covers = nlohmann::json::array();
  for (const CoverEdge& e : p.covers)
    covers.push_back(nlohmann::json::array({e.lower, e.upper}));
  j["covers"] = std::move(covers);
  if (cls != nullptr) j["classes"] = cls->class_of;
  return j.dump();
}

}  // namespace tamari
