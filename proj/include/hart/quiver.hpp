#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hart/error.hpp"
#include "hart/matrix.hpp"

namespace hart {

struct Vertex {
  int id = 0;
  std::string label;
};

struct Arrow {
  int id = 0;
  int src = 0;  // vertex id
  int tgt = 0;  // vertex id
  std::string label;
};

// Finite directed graph. Vertex/arrow ids are arbitrary unique ints; most
// algorithms work with dense indices obtained from vertex_index/arrow_index.
class Quiver {
 public:
  Quiver() = default;

  int add_vertex(int id, std::string label = "") {
    if (vindex_.count(id)) throw UsageError("duplicate vertex id");
    if (label.empty()) label = std::to_string(id);
    vindex_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back({id, std::move(label)});
    return id;
  }
  int add_arrow(int id, int src, int tgt, std::string label = "") {
    if (aindex_.count(id)) throw UsageError("duplicate arrow id");
    if (!vindex_.count(src) || !vindex_.count(tgt))
      throw UsageError("arrow endpoint is not a declared vertex");
    if (label.empty()) label = "a" + std::to_string(id);
    aindex_[id] = static_cast<int>(arrows_.size());
    arrows_.push_back({id, src, tgt, std::move(label)});
    return id;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(int id) const {
    auto it = vindex_.find(id);
    if (it == vindex_.end()) throw UsageError("unknown vertex id " + std::to_string(id));
    return it->second;
  }
  int arrow_index(int id) const {
    auto it = aindex_.find(id);
    if (it == aindex_.end()) throw UsageError("unknown arrow id " + std::to_string(id));
    return it->second;
  }
  bool has_vertex(int id) const { return vindex_.count(id) != 0; }
  const Arrow& arrow_by_id(int id) const { return arrows_[arrow_index(id)]; }
  const Vertex& vertex_by_id(int id) const { return vertices_[vertex_index(id)]; }

  // Arrow ids leaving / entering a vertex, in insertion order.
  std::vector<int> out_arrows(int vertex_id) const {
    std::vector<int> r;
    for (const auto& a : arrows_)
      if (a.src == vertex_id) r.push_back(a.id);
    return r;
  }
  std::vector<int> in_arrows(int vertex_id) const {
    std::vector<int> r;
    for (const auto& a : arrows_)
      if (a.tgt == vertex_id) r.push_back(a.id);
    return r;
  }

  // Number of arrows between i and j in either direction (loops excluded).
  std::size_t edge_count(int vi, int vj) const {
    std::size_t n = 0;
    for (const auto& a : arrows_)
      if ((a.src == vi && a.tgt == vj) || (a.src == vj && a.tgt == vi)) ++n;
    return n;
  }
  bool has_loop() const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [](const Arrow& a) { return a.src == a.tgt; });
  }

  bool is_acyclic() const {
    return longest_path_length() >= 0;
  }
  // Longest path length (in arrows), or -1 if the quiver has an oriented cycle.
  long longest_path_length() const {
    std::size_t n = vertices_.size();
    std::vector<int> indeg(n, 0);
    for (const auto& a : arrows_) indeg[vertex_index(a.tgt)]++;
    std::vector<int> order;
    std::vector<int> deg = indeg;
    for (std::size_t v = 0; v < n; ++v)
      if (deg[v] == 0) order.push_back(static_cast<int>(v));
    for (std::size_t k = 0; k < order.size(); ++k) {
      int v = order[k];
      for (const auto& a : arrows_)
        if (vertex_index(a.src) == v && --deg[vertex_index(a.tgt)] == 0)
          order.push_back(vertex_index(a.tgt));
    }
    if (order.size() != n) return -1;
    std::vector<long> longest(n, 0);
    long best = 0;
    for (int v : order)
      for (const auto& a : arrows_)
        if (vertex_index(a.src) == v) {
          int w = vertex_index(a.tgt);
          longest[w] = std::max(longest[w], longest[v] + 1);
          best = std::max(best, longest[w]);
        }
    return best;
  }

  // Same vertices and arrow ids, all arrows reversed.
  Quiver opposite() const {
    Quiver q;
    for (const auto& v : vertices_) q.add_vertex(v.id, v.label);
    for (const auto& a : arrows_) q.add_arrow(a.id, a.tgt, a.src, a.label);
    return q;
  }

  bool same_shape(const Quiver& o) const {
    if (vertices_.size() != o.vertices_.size() || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].id != o.vertices_[i].id) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].id != o.arrows_[i].id || arrows_[i].src != o.arrows_[i].src ||
          arrows_[i].tgt != o.arrows_[i].tgt)
        return false;
    return true;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::map<int, int> vindex_, aindex_;
};

// Linear-orientation A_n quiver 1 -> 2 -> ... -> n, arrow i has id i.
inline Quiver linear_quiver(int n, int first_vertex = 1) {
  Quiver q;
  for (int i = 0; i < n; ++i) q.add_vertex(first_vertex + i);
  for (int i = 0; i + 1 < n; ++i) q.add_arrow(i + 1, first_vertex + i, first_vertex + i + 1);
  return q;
}

// Oriented cycle 1 -> 2 -> ... -> n -> 1.
inline Quiver cyclic_quiver(int n) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(i);
  for (int i = 1; i <= n; ++i) q.add_arrow(i, i, i % n + 1);
  return q;
}

// A path is a composable arrow-id sequence read left to right:
// [a, b] means "a then b", requiring tgt(a) = src(b). Empty = trivial path.
struct PathTerm {
  Rational coef;
  std::vector<int> path;
};
using PathComb = std::vector<PathTerm>;

inline void validate_path(const Quiver& q, const std::vector<int>& path, int* src = nullptr,
                          int* tgt = nullptr) {
  if (path.empty()) throw UsageError("empty path in relation");
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (q.arrow_by_id(path[k]).tgt != q.arrow_by_id(path[k + 1]).src)
      throw UsageError("non-composable path at position " + std::to_string(k + 1) + ": arrow " +
                       std::to_string(path[k]) + " does not compose with arrow " +
                       std::to_string(path[k + 1]));
  }
  if (src) *src = q.arrow_by_id(path.front()).src;
  if (tgt) *tgt = q.arrow_by_id(path.back()).tgt;
}

// Checks composability and that all terms share source and target.
inline void validate_relation(const Quiver& q, const PathComb& rel) {
  if (rel.empty()) throw UsageError("empty relation");
  int s0 = -1, t0 = -1;
  for (std::size_t t = 0; t < rel.size(); ++t) {
    if (rel[t].coef == 0) throw UsageError("zero coefficient in relation");
    if (rel[t].path.size() < 2)
      throw UsageError("relation term of length < 2 is not admissible");
    int s, e;
    validate_path(q, rel[t].path, &s, &e);
    if (t == 0) {
      s0 = s;
      t0 = e;
    } else if (s != s0 || e != t0) {
      throw UsageError("relation terms do not share source/target");
    }
  }
}

inline PathComb reverse_relation(const PathComb& rel) {
  PathComb r = rel;
  for (auto& term : r) std::reverse(term.path.begin(), term.path.end());
  return r;
}

}  // namespace hart
