#include "tamari/polygon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace tamari {

namespace {

// Ascending neighbor lists of the partition's edge set (boundary, root
// edge, diagonals); nbr[v] holds the w > v with an edge (v, w).
std::vector<std::vector<int>> neighbors(int top,
                                        const std::vector<std::pair<int, int>>& diagonals) {
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(top) + 1);
  for (int v = 0; v < top; ++v) nbr[static_cast<std::size_t>(v)].push_back(v + 1);
  if (top > 1) nbr[0].push_back(top);
  for (auto [a, b] : diagonals) nbr[static_cast<std::size_t>(a)].push_back(b);
  for (auto& lst : nbr) std::sort(lst.begin(), lst.end());
  return nbr;
}

// Boundary path of the face directly below the edge (a, b): from a,
// repeatedly jump to the largest neighbor inside [.., b], excluding the
// edge (a, b) itself on the first step.
std::vector<int> face_path(const std::vector<std::vector<int>>& nbr, int a, int b) {
  std::vector<int> path{a};
  int v = a;
  while (v != b) {
    const auto& lst = nbr[static_cast<std::size_t>(v)];
    int next = -1;
    for (int d : lst) {
      if (d > b) break;
      if (v == a && d == b) continue;
      next = d;
    }
    if (next < 0) throw std::invalid_argument("diagonals do not enclose faces");
    path.push_back(next);
    v = next;
  }
  return path;
}

std::vector<std::vector<int>> compute_faces(
    int arity, int carets, const std::vector<std::pair<int, int>>& diagonals) {
  if (carets == 0) return {{0, 1}};
  int top = (arity - 1) * carets + 1;
  auto nbr = neighbors(top, diagonals);
  std::vector<std::vector<int>> faces;
  std::function<void(int, int)> walk = [&](int a, int b) {
    std::vector<int> path = face_path(nbr, a, b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i + 1] > path[i] + 1) walk(path[i], path[i + 1]);
    }
    faces.push_back(std::move(path));
  };
  walk(0, top);
  for (const auto& f : faces) {
    if (static_cast<int>(f.size()) != arity + 1)
      throw std::invalid_argument("diagonals do not cut " +
                                  std::to_string(arity + 1) + "-sided faces");
  }
  if (static_cast<int>(faces.size()) != carets)
    throw std::invalid_argument("wrong number of faces");
  return faces;
}

std::pair<int, int> normalized(std::pair<int, int> d) {
  if (d.first > d.second) std::swap(d.first, d.second);
  return d;
}

}  // namespace

PolygonPartition::PolygonPartition(int arity, int carets,
                                   std::vector<std::pair<int, int>> diagonals)
    : arity_(arity), carets_(carets), diagonals_(std::move(diagonals)) {
  if (arity_ < 2) throw std::invalid_argument("arity must be at least 2");
  if (carets_ < 0) throw std::invalid_argument("negative face count");
  int expected = carets_ > 0 ? carets_ - 1 : 0;
  if (static_cast<int>(diagonals_.size()) != expected)
    throw std::invalid_argument("a partition into " + std::to_string(carets_) +
                                " faces needs " + std::to_string(expected) +
                                " diagonals");
  int top = vertex_count() - 1;
  for (auto& d : diagonals_) {
    d = normalized(d);
    if (d.first < 0 || d.second > top)
      throw std::invalid_argument("diagonal endpoint out of range");
    if (d.second - d.first < 2 || (d.first == 0 && d.second == top))
      throw std::invalid_argument("diagonal coincides with a polygon edge");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  for (std::size_t i = 0; i + 1 < diagonals_.size(); ++i) {
    if (diagonals_[i] == diagonals_[i + 1])
      throw std::invalid_argument("duplicate diagonal");
  }
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
      auto [a1, b1] = diagonals_[i];
      auto [a2, b2] = diagonals_[j];
      if (a1 < a2 && a2 < b1 && b1 < b2)
        throw std::invalid_argument("diagonals cross");
    }
  }
  compute_faces(arity_, carets_, diagonals_);  // validates face shape
}

std::vector<std::vector<int>> PolygonPartition::faces() const {
  return compute_faces(arity_, carets_, diagonals_);
}

std::string PolygonPartition::str() const { return partition_json(*this); }

std::vector<std::vector<int>> construction_paths(const StarSequence& s) {
  int k = s.arity();
  int n = s.value_count();
  if (static_cast<int>(s.size()) != (k - 1) * n)
    throw std::invalid_argument("path construction needs a star-free sequence");
  int top = (k - 1) * n + 1;
  std::vector<std::vector<int>> paths;
  std::vector<int> path{0, top};
  paths.push_back(path);
  for (int i = n; i >= 1; --i) {
    for (std::size_t p : s.positions_of(i)) {
      int v = static_cast<int>(p) + 1;
      path.insert(std::upper_bound(path.begin(), path.end(), v), v);
    }
    paths.push_back(path);
  }
  return paths;
}

PolygonPartition partition_from_sequence(const StarSequence& s) {
  int k = s.arity();
  int n = s.value_count();
  int top = (k - 1) * n + 1;
  std::set<std::pair<int, int>> edges;
  for (const auto& path : construction_paths(s)) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      edges.insert({path[i], path[i + 1]});
  }
  std::vector<std::pair<int, int>> diagonals;
  for (auto [a, b] : edges) {
    if (b == a + 1) continue;
    if (a == 0 && b == top) continue;
    diagonals.push_back({a, b});
  }
  return PolygonPartition(k, n, std::move(diagonals));
}

namespace {

// The union of the two faces adjacent to d, as 2k sorted vertices.
std::vector<int> merged_cell(const PolygonPartition& p, std::pair<int, int> d) {
  d = normalized(d);
  auto faces = p.faces();
  std::vector<std::vector<int>> hit;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::size_t j = (i + 1) % f.size();
      auto e = normalized({f[i], f[j]});
      if (e == d) {
        hit.push_back(f);
        break;
      }
    }
  }
  if (hit.size() != 2)
    throw std::invalid_argument("not a diagonal of this partition");
  std::set<int> verts(hit[0].begin(), hit[0].end());
  verts.insert(hit[1].begin(), hit[1].end());
  return std::vector<int>(verts.begin(), verts.end());
}

}  // namespace

int diagonal_size(const PolygonPartition& p, std::pair<int, int> d) {
  d = normalized(d);
  std::vector<int> cell = merged_cell(p, d);
  int k = p.arity();
  auto it = std::find(cell.begin(), cell.end(), d.first);
  int idx = static_cast<int>(it - cell.begin());
  if (idx + k >= static_cast<int>(cell.size()) ||
      cell[static_cast<std::size_t>(idx + k)] != d.second)
    throw std::logic_error("diagonal endpoints are not opposite in their cell");
  return idx + 1;
}

PolygonPartition flip_up(const PolygonPartition& p, std::pair<int, int> d) {
  d = normalized(d);
  std::vector<int> cell = merged_cell(p, d);
  int k = p.arity();
  auto it = std::find(cell.begin(), cell.end(), d.first);
  int idx = static_cast<int>(it - cell.begin());
  if (idx + 1 == k)
    throw std::domain_error("diagonal already has the maximal size " +
                            std::to_string(k));
  std::pair<int, int> replacement{cell[static_cast<std::size_t>(idx + 1)],
                                  cell[static_cast<std::size_t>(idx + 1 + k)]};
  std::vector<std::pair<int, int>> diagonals = p.diagonals();
  for (auto& e : diagonals) {
    if (e == d) e = replacement;
  }
  return PolygonPartition(p.arity(), p.caret_count(), std::move(diagonals));
}

Poset tamari_order_partitions(int arity, int carets, std::optional<long long> cap) {
  long long limit = cap.value_or(20000);
  long long count = count_shapes(arity, carets);
  if (count > limit)
    throw std::domain_error(std::to_string(count) +
                            " partitions exceed the enumeration cap " +
                            std::to_string(limit));
  std::vector<ForestShape> shapes = enumerate_tree_shapes(arity, carets);
  std::vector<PolygonPartition> parts;
  parts.reserve(shapes.size());
  for (const ForestShape& sh : shapes) parts.push_back(tree_to_partition(sh));
  std::sort(parts.begin(), parts.end(),
            [](const PolygonPartition& a, const PolygonPartition& b) {
              return a.diagonals() < b.diagonals();
            });
  Poset poset;
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    poset.elements.push_back(parts[i].str());
    index.emplace(parts[i].diagonals(), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& d : parts[i].diagonals()) {
      if (diagonal_size(parts[i], d) < arity) {
        PolygonPartition up = flip_up(parts[i], d);
        poset.covers.push_back({static_cast<int>(i), index.at(up.diagonals()), -1});
      }
    }
  }
  return poset;
}

PolygonPartition tree_to_partition(const ForestShape& t) {
  if (!t.is_single_tree())
    throw std::invalid_argument("partitions correspond to single trees");
  int k = t.arity();
  int n = t.caret_count();
  std::vector<std::pair<int, int>> diagonals;
  if (n > 0) {
    int leaf_cursor = 0;
    std::function<std::pair<int, int>(const TreeNode&, bool)> walk =
        [&](const TreeNode& node, bool root) -> std::pair<int, int> {
      if (node.is_leaf()) {
        int i = leaf_cursor++;
        return {i, i};
      }
      int lo = -1, hi = -1;
      for (std::size_t c = 0; c < node.children().size(); ++c) {
        auto span = walk(node.children()[c], false);
        if (c == 0) lo = span.first;
        hi = span.second;
      }
      if (!root) diagonals.push_back({lo, hi + 1});
      return {lo, hi};
    };
    walk(t.trees().front(), true);
  }
  return PolygonPartition(k, n, std::move(diagonals));
}

ForestShape partition_to_tree(const PolygonPartition& p) {
  int k = p.arity();
  int n = p.caret_count();
  if (n == 0) return ForestShape(k);
  int top = p.vertex_count() - 1;
  auto nbr = neighbors(top, p.diagonals());
  std::function<TreeNode(int, int)> build = [&](int a, int b) -> TreeNode {
    if (b == a + 1) return TreeNode::leaf();
    std::vector<int> path = face_path(nbr, a, b);
    std::vector<TreeNode> children;
    children.reserve(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      children.push_back(build(path[i], path[i + 1]));
    return TreeNode::caret(0, std::move(children));
  };
  return ForestShape(k, {build(0, top)});
}

std::vector<PolygonPartition> glue(const std::vector<PolygonPartition>& first,
                                   const std::vector<PolygonPartition>& second) {
  int k = 0;
  for (const auto& p : first) k = p.arity();
  for (const auto& p : second) k = p.arity();
  if (k == 0) return {};
  for (const auto& p : first) {
    if (p.arity() != k) throw std::domain_error("mixed arities in glue");
  }
  for (const auto& p : second) {
    if (p.arity() != k) throw std::domain_error("mixed arities in glue");
  }
  PolygonPartition two_gon(k, 0, {});
  std::size_t next = 0;
  std::vector<PolygonPartition> out;
  for (const PolygonPartition& q : second) {
    int leaf_edges = (k - 1) * q.caret_count() + 1;
    std::vector<int> offset(static_cast<std::size_t>(leaf_edges) + 1, 0);
    std::vector<const PolygonPartition*> parts(static_cast<std::size_t>(leaf_edges));
    int total = q.caret_count();
    for (int t = 0; t < leaf_edges; ++t) {
      const PolygonPartition& p =
          next < first.size() ? first[next] : two_gon;
      ++next;
      parts[static_cast<std::size_t>(t)] = &p;
      offset[static_cast<std::size_t>(t) + 1] =
          offset[static_cast<std::size_t>(t)] + (k - 1) * p.caret_count() + 1;
      total += p.caret_count();
    }
    int new_top = offset[static_cast<std::size_t>(leaf_edges)];
    std::vector<std::pair<int, int>> diagonals;
    for (auto [a, b] : q.diagonals())
      diagonals.push_back({offset[static_cast<std::size_t>(a)],
                           offset[static_cast<std::size_t>(b)]});
    for (int t = 0; t < leaf_edges; ++t) {
      const PolygonPartition& p = *parts[static_cast<std::size_t>(t)];
      int base = offset[static_cast<std::size_t>(t)];
      if (p.caret_count() > 0) {
        std::pair<int, int> seam{base, offset[static_cast<std::size_t>(t) + 1]};
        if (!(seam.first == 0 && seam.second == new_top))
          diagonals.push_back(seam);
      }
      for (auto [a, b] : p.diagonals()) diagonals.push_back({a + base, b + base});
    }
    out.push_back(PolygonPartition(k, total, std::move(diagonals)));
  }
  for (; next < first.size(); ++next) out.push_back(first[next]);
  while (!out.empty() && out.back().caret_count() == 0) out.pop_back();
  return out;
}

std::string partition_json(const PolygonPartition& p) {
  nlohmann::json j;
  j["k"] = p.arity();
  j["n"] = p.caret_count();
  nlohmann::json diags = nlohmann::json::array();
  for (auto [a, b] : p.diagonals()) diags.push_back(nlohmann::json::array({a, b}));
  j["diagonals"] = std::move(diags);
  return j.dump();
}

PolygonPartition parse_partition_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad partition JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("n") ||
      !j.contains("diagonals"))
    throw std::invalid_argument("partition JSON needs \"k\", \"n\", \"diagonals\"");
  std::vector<std::pair<int, int>> diagonals;
  for (const auto& d : j["diagonals"]) {
    if (!d.is_array() || d.size() != 2)
      throw std::invalid_argument("diagonals must be vertex pairs");
    diagonals.push_back({d[0].get<int>(), d[1].get<int>()});
  }
  return PolygonPartition(j["k"].get<int>(), j["n"].get<int>(), std::move(diagonals));
}

}  // namespace tamari
