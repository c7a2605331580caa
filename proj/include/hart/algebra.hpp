#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hart/matrix.hpp"
#include "hart/quiver.hpp"

namespace hart {

// Sparse vector over basis indices, sorted ascending, no explicit zeros.
using SVec = std::vector<std::pair<std::size_t, Rational>>;

inline void svec_add_scaled(SVec& dst, const SVec& src, const Rational& c) {
  if (c == 0 || src.empty()) return;
  SVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, c * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second + c * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

inline Vec svec_dense(const SVec& v, std::size_t n) {
  Vec d(n, Rational(0));
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

namespace detail {

struct AlgebraCore {
  std::vector<std::vector<int>> basis_paths;  // arrow ids; idempotents first
  std::vector<int> basis_src, basis_tgt;      // vertex indices
  std::vector<SVec> table;                    // dim x dim products
};

// Reduce `v` against echelon rows keyed by their pivot (= largest index in
// the row). One downward sweep suffices: subtracting a row only introduces
// indices strictly below its pivot, and indices are visited largest first.
inline void sweep_reduce(std::map<std::size_t, Rational>& v,
                         const std::map<std::size_t, SVec>& rows) {
  if (v.empty()) return;
  std::size_t bound = v.rbegin()->first;
  while (!v.empty()) {
    auto it = v.upper_bound(bound);
    if (it == v.begin()) break;
    --it;  // largest index <= bound
    std::size_t idx = it->first;
    if (it->second == 0) {
      v.erase(it);
    } else if (auto rit = rows.find(idx); rit != rows.end()) {
      Rational c = it->second;
      v.erase(it);
      for (const auto& [w, coef] : rit->second) {
        if (w == idx) continue;
        auto slot = v.try_emplace(w, Rational(0)).first;
        slot->second -= c * coef;
        if (slot->second == 0) v.erase(slot);
      }
    }
    if (idx == 0) break;
    bound = idx - 1;
  }
}

inline void echelon_insert(std::map<std::size_t, SVec>& rows, std::map<std::size_t, Rational> v) {
  sweep_reduce(v, rows);
  if (v.empty()) return;
  auto pivot = std::prev(v.end())->first;
  Rational inv = 1 / v.rbegin()->second;
  SVec row;
  row.reserve(v.size());
  for (const auto& [i, c] : v) row.emplace_back(i, c * inv);
  rows[pivot] = std::move(row);
}

}  // namespace detail

// A finite-dimensional quotient of a path algebra: kQ / (relations + J^N).
// Basis elements are normal-form paths (degree-then-lex smallest complement);
// the idempotent e_i is basis element i.
class Algebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathComb>& relations() const { return relations_; }
  int nilpotency() const { return nilpotency_; }
  std::size_t dim() const { return core_.basis_paths.size(); }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  const std::vector<std::vector<int>>& basis_paths() const { return core_.basis_paths; }
  int basis_src(std::size_t k) const { return core_.basis_src[k]; }  // vertex index
  int basis_tgt(std::size_t k) const { return core_.basis_tgt[k]; }
  std::size_t basis_len(std::size_t k) const { return core_.basis_paths[k].size(); }
  std::size_t idempotent_index(int vertex_index) const { return vertex_index; }

  // Basis index of an arrow (arrows are always in normal form).
  std::size_t arrow_basis_index(int arrow_id) const {
    return arrow_basis_.at(arrow_id);
  }

  const SVec& mult(std::size_t a, std::size_t b) const { return core_.table[a * dim() + b]; }

  SVec mult(const SVec& x, const SVec& y) const {
    SVec r;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y) svec_add_scaled(r, mult(i, j), ci * cj);
    return r;
  }

  // Normal form of an arbitrary composable path (arrow ids).
  SVec reduce_path(const std::vector<int>& path) const {
    if (path.empty()) throw UsageError("reduce_path: empty path has no unique vertex");
    validate_path(quiver_, path);
    SVec v{{arrow_basis_index(path[0]), Rational(1)}};
    for (std::size_t k = 1; k < path.size(); ++k) {
      SVec next;
      std::size_t ab = arrow_basis_index(path[k]);
      for (const auto& [i, c] : v) svec_add_scaled(next, mult(i, ab), c);
      v = std::move(next);
      if (v.empty()) break;
    }
    return v;
  }

  SVec reduce_combination(const PathComb& comb) const {
    SVec v;
    for (const auto& t : comb) {
      SVec term = reduce_path(t.path);
      svec_add_scaled(v, term, t.coef);
    }
    return v;
  }

  std::string path_string(const std::vector<int>& path) const {
    if (path.empty()) return "(trivial)";
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) s += ".";
      s += quiver_.arrow_by_id(path[i]).label;
    }
    return s;
  }
  std::string basis_string(std::size_t k) const {
    if (basis_len(k) == 0) return "e" + quiver_.vertices()[basis_src(k)].label;
    return path_string(core_.basis_paths[k]);
  }

  friend Algebra build_algebra(const Quiver& q, const std::vector<PathComb>& rels, int N,
                               bool check_stability, bool check_associativity);

 private:
  Quiver quiver_;
  std::vector<PathComb> relations_;
  int nilpotency_ = 1;
  detail::AlgebraCore core_;
  std::map<int, std::size_t> arrow_basis_;
};

namespace detail {

inline bool all_homogeneous(const std::vector<PathComb>& rels) {
  for (const auto& r : rels) {
    for (const auto& t : r)
      if (t.path.size() != r[0].path.size()) return false;
  }
  return true;
}

// Degreewise construction; valid when every relation is homogeneous.
// Keeps all linear algebra inside single path degrees.
inline AlgebraCore build_graded(const Quiver& q, const std::vector<PathComb>& rels, int N) {
  std::size_t V = q.vertex_count();
  std::vector<int> arrow_order;  // dense arrow indices sorted by id
  for (const auto& a : q.arrows()) arrow_order.push_back(a.id);
  std::sort(arrow_order.begin(), arrow_order.end());

  struct Degree {
    std::vector<std::vector<int>> basis;       // paths (arrow ids)
    std::vector<int> src, tgt;                 // vertex indices per basis word
    std::vector<std::vector<int>> candidates;  // paths, deg-lex order
    std::vector<int> cand_src, cand_tgt;
    std::map<std::pair<int, std::size_t>, std::size_t> cand_of;  // (arrow id, tail) -> cand
    std::vector<SVec> red;                     // candidate -> basis coords
  };
  std::vector<Degree> deg(N);

  // Degree 0: idempotents.
  for (std::size_t v = 0; v < V; ++v) {
    deg[0].basis.push_back({});
    deg[0].src.push_back(static_cast<int>(v));
    deg[0].tgt.push_back(static_cast<int>(v));
  }

  // prepend arrow a (by id) to a vector over basis of degree d-1.
  auto prepend = [&](int aid, const SVec& v, int d) -> SVec {
    SVec out;
    const Arrow& a = q.arrow_by_id(aid);
    for (const auto& [u, c] : v) {
      if (deg[d - 1].src[u] != q.vertex_index(a.tgt)) continue;
      auto it = deg[d].cand_of.find({aid, u});
      if (it == deg[d].cand_of.end()) continue;  // candidate died: not possible, guarded below
      svec_add_scaled(out, deg[d].red[it->second], c);
    }
    return out;
  };

  // Coords of a composable word over deg[len(word)].basis.
  auto reduce_word = [&](const std::vector<int>& word) -> SVec {
    int t = q.vertex_index(q.arrow_by_id(word.back()).tgt);
    SVec v{{static_cast<std::size_t>(t), Rational(1)}};
    for (int j = static_cast<int>(word.size()) - 1, d = 1; j >= 0; --j, ++d)
      v = prepend(word[j], v, d);
    return v;
  };

  for (int d = 1; d < N; ++d) {
    Degree& D = deg[d];
    // Candidates alpha.u in deg-lex order.
    for (int aid : arrow_order) {
      const Arrow& a = q.arrow_by_id(aid);
      for (std::size_t u = 0; u < deg[d - 1].basis.size(); ++u) {
        if (deg[d - 1].src[u] != q.vertex_index(a.tgt)) continue;
        std::vector<int> p;
        p.push_back(aid);
        p.insert(p.end(), deg[d - 1].basis[u].begin(), deg[d - 1].basis[u].end());
        D.cand_of[{aid, u}] = D.candidates.size();
        D.candidates.push_back(std::move(p));
        D.cand_src.push_back(q.vertex_index(a.src));
        D.cand_tgt.push_back(deg[d - 1].tgt[u]);
      }
    }
    // Relation span: r.u for each homogeneous relation r, u basis of degree d-deg(r).
    std::map<std::size_t, SVec> rows;
    for (const auto& r : rels) {
      int m = static_cast<int>(r[0].path.size());
      if (m > d) continue;
      for (std::size_t u = 0; u < deg[d - m].basis.size(); ++u) {
        std::map<std::size_t, Rational> vec;
        for (const auto& term : r) {
          if (q.vertex_index(q.arrow_by_id(term.path.back()).tgt) != deg[d - m].src[u]) {
            continue;  // term does not compose with u; contributes nothing
          }
          // Reduce term.path * u: prepend arrows right to left, stopping at
          // candidate coordinates for the leading arrow.
          SVec v{{u, Rational(1)}};
          for (int j = m - 1; j >= 1; --j) v = prepend(term.path[j], v, d - j);
          int lead = term.path[0];
          const Arrow& a = q.arrow_by_id(lead);
          for (const auto& [w, c] : v) {
            if (deg[d - 1].src[w] != q.vertex_index(a.tgt)) continue;
            vec[D.cand_of.at({lead, w})] += term.coef * c;
          }
        }
        detail::echelon_insert(rows, std::move(vec));
      }
    }
    // Basis = non-pivot candidates; red = sweep reduction.
    std::vector<std::size_t> new_index(D.candidates.size(), SIZE_MAX);
    for (std::size_t k = 0; k < D.candidates.size(); ++k) {
      if (rows.count(k)) continue;
      new_index[k] = D.basis.size();
      D.basis.push_back(D.candidates[k]);
      D.src.push_back(D.cand_src[k]);
      D.tgt.push_back(D.cand_tgt[k]);
    }
    D.red.resize(D.candidates.size());
    for (std::size_t k = 0; k < D.candidates.size(); ++k) {
      if (new_index[k] != SIZE_MAX) {
        D.red[k] = {{new_index[k], Rational(1)}};
        continue;
      }
      std::map<std::size_t, Rational> v{{k, Rational(1)}};
      detail::sweep_reduce(v, rows);
      SVec out;
      for (const auto& [idx, c] : v)
        if (c != 0) out.emplace_back(new_index[idx], c);
      std::sort(out.begin(), out.end());
      D.red[k] = std::move(out);
    }
  }

  // Assemble global core.
  AlgebraCore core;
  std::vector<std::size_t> offset(N, 0);
  for (int d = 0; d < N; ++d) {
    offset[d] = core.basis_paths.size();
    for (std::size_t u = 0; u < deg[d].basis.size(); ++u) {
      core.basis_paths.push_back(deg[d].basis[u]);
      core.basis_src.push_back(deg[d].src[u]);
      core.basis_tgt.push_back(deg[d].tgt[u]);
    }
  }
  std::size_t dim = core.basis_paths.size();
  core.table.assign(dim * dim, {});
  for (std::size_t a = 0; a < dim; ++a) {
    int da = static_cast<int>(core.basis_paths[a].size());
    for (std::size_t b = 0; b < dim; ++b) {
      int db = static_cast<int>(core.basis_paths[b].size());
      if (core.basis_tgt[a] != core.basis_src[b]) continue;
      if (da + db >= N) continue;
      SVec local;
      if (da == 0) {
        local = {{b - offset[db], Rational(1)}};
      } else {
        std::vector<int> word = core.basis_paths[a];
        word.insert(word.end(), core.basis_paths[b].begin(), core.basis_paths[b].end());
        local = reduce_word(word);
      }
      SVec glob;
      for (const auto& [u, c] : local) glob.emplace_back(offset[da + db] + u, c);
      core.table[a * dim + b] = std::move(glob);
    }
  }
  return core;
}

// Generic construction over the whole truncated path space. Used for
// non-homogeneous relations; path count must stay at desk scale.
inline AlgebraCore build_general(const Quiver& q, const std::vector<PathComb>& rels, int N) {
  std::size_t V = q.vertex_count();
  std::vector<int> arrow_order;
  for (const auto& a : q.arrows()) arrow_order.push_back(a.id);
  std::sort(arrow_order.begin(), arrow_order.end());

  std::vector<std::vector<int>> paths;      // global deg-lex order
  std::vector<int> psrc, ptgt;              // vertex indices
  std::map<std::vector<int>, std::size_t> pindex;
  std::vector<std::pair<std::size_t, std::size_t>> degree_range(N);

  for (std::size_t v = 0; v < V; ++v) {
    paths.push_back({});
    psrc.push_back(static_cast<int>(v));
    ptgt.push_back(static_cast<int>(v));
  }
  degree_range[0] = {0, paths.size()};
  for (int d = 1; d < N; ++d) {
    std::size_t begin = paths.size();
    for (int aid : arrow_order) {
      const Arrow& a = q.arrow_by_id(aid);
      for (std::size_t u = degree_range[d - 1].first; u < degree_range[d - 1].second; ++u) {
        if (psrc[u] != q.vertex_index(a.tgt)) continue;
        std::vector<int> p;
        p.push_back(aid);
        p.insert(p.end(), paths[u].begin(), paths[u].end());
        psrc.push_back(q.vertex_index(a.src));
        ptgt.push_back(ptgt[u]);
        paths.push_back(std::move(p));
      }
    }
    degree_range[d] = {begin, paths.size()};
    if (paths.size() > 500000)
      throw ComputeError("path space too large for the generic constructor; lower N");
  }
  for (std::size_t k = 0; k < paths.size(); ++k) pindex[paths[k]] = k;

  // Span of truncated p * r * q over the path space.
  std::map<std::size_t, SVec> rows;
  for (const auto& r : rels) {
    int s, t;
    validate_path(q, r[0].path, &s, &t);
    std::size_t minlen = r[0].path.size();
    for (const auto& term : r) minlen = std::min(minlen, term.path.size());
    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (ptgt[p] != q.vertex_index(s)) continue;
      for (std::size_t qq = 0; qq < paths.size(); ++qq) {
        if (psrc[qq] != q.vertex_index(t)) continue;
        if (paths[p].size() + paths[qq].size() + minlen >= static_cast<std::size_t>(N)) continue;
        std::map<std::size_t, Rational> vec;
        for (const auto& term : r) {
          std::vector<int> w = paths[p];
          w.insert(w.end(), term.path.begin(), term.path.end());
          w.insert(w.end(), paths[qq].begin(), paths[qq].end());
          if (w.size() >= static_cast<std::size_t>(N)) continue;
          vec[pindex.at(w)] += term.coef;
        }
        detail::echelon_insert(rows, std::move(vec));
      }
    }
  }

  std::vector<std::size_t> new_index(paths.size(), SIZE_MAX);
  AlgebraCore core;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (rows.count(k)) continue;
    new_index[k] = core.basis_paths.size();
    core.basis_paths.push_back(paths[k]);
    core.basis_src.push_back(psrc[k]);
    core.basis_tgt.push_back(ptgt[k]);
  }
  std::size_t dim = core.basis_paths.size();
  auto reduce_index = [&](std::size_t k) -> SVec {
    std::map<std::size_t, Rational> v{{k, Rational(1)}};
    detail::sweep_reduce(v, rows);
    SVec out;
    for (const auto& [idx, c] : v)
      if (c != 0) out.emplace_back(new_index[idx], c);
    std::sort(out.begin(), out.end());
    return out;
  };
  core.table.assign(dim * dim, {});
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (core.basis_tgt[a] != core.basis_src[b]) continue;
      if (core.basis_paths[a].size() + core.basis_paths[b].size() >=
          static_cast<std::size_t>(N))
        continue;
      if (core.basis_paths[a].empty()) {
        core.table[a * dim + b] = {{b, Rational(1)}};
      } else if (core.basis_paths[b].empty()) {
        core.table[a * dim + b] = {{a, Rational(1)}};
      } else {
        std::vector<int> w = core.basis_paths[a];
        w.insert(w.end(), core.basis_paths[b].begin(), core.basis_paths[b].end());
        core.table[a * dim + b] = reduce_index(pindex.at(w));
      }
    }
  return core;
}

inline AlgebraCore build_core(const Quiver& q, const std::vector<PathComb>& rels, int N) {
  return all_homogeneous(rels) ? build_graded(q, rels, N) : build_general(q, rels, N);
}

}  // namespace detail

inline Algebra build_algebra(const Quiver& q, const std::vector<PathComb>& rels, int N,
                             bool check_stability = true, bool check_associativity = true) {
  if (q.vertex_count() == 0) throw UsageError("quiver has no vertices");
  if (N < 1) throw UsageError("nilpotency bound must be >= 1");
  for (const auto& r : rels) validate_relation(q, r);

  Algebra A;
  A.quiver_ = q;
  A.relations_ = rels;
  A.nilpotency_ = N;
  A.core_ = detail::build_core(q, rels, N);

  if (check_stability) {
    long lp = q.longest_path_length();
    bool trivially_stable = (lp >= 0 && N > lp);
    if (!trivially_stable) {
      auto probe = detail::build_core(q, rels, N + 1);
      if (probe.basis_paths.size() != A.core_.basis_paths.size()) {
        std::string witness;
        for (std::size_t k = 0; k < probe.basis_paths.size(); ++k)
          if (probe.basis_paths[k].size() == static_cast<std::size_t>(N)) {
            witness = A.path_string(probe.basis_paths[k]);
            break;
          }
        throw ComputeError("nilpotency bound too small: dimension grows at N+1; witness path " +
                           witness);
      }
    }
  }

  for (const auto& a : q.arrows()) {
    bool found = false;
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (A.core_.basis_paths[k].size() == 1 && A.core_.basis_paths[k][0] == a.id) {
        A.arrow_basis_[a.id] = k;
        found = true;
        break;
      }
    if (!found)
      throw UsageError("relations are not admissible: arrow " + a.label +
                       " vanishes in the quotient");
  }

  if (check_associativity) {
    std::size_t n = A.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (A.basis_tgt(a) != A.basis_src(b)) continue;
        const SVec& ab = A.mult(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (A.basis_tgt(b) != A.basis_src(c)) continue;
          if (A.basis_len(a) + A.basis_len(b) + A.basis_len(c) >=
              static_cast<std::size_t>(N))
            continue;
          SVec left;
          for (const auto& [i, ci] : ab) svec_add_scaled(left, A.mult(i, c), ci);
          SVec right;
          for (const auto& [j, cj] : A.mult(b, c)) svec_add_scaled(right, A.mult(a, j), cj);
          if (left != right) throw ComputeError("internal error: multiplication not associative");
        }
      }
  }

  // Every relation must reduce to zero.
  for (const auto& r : rels)
    if (!A.reduce_combination(r).empty())
      throw ComputeError("internal error: relation does not vanish in the quotient");

  return A;
}

inline Algebra opposite_algebra(const Algebra& A) {
  std::vector<PathComb> rels;
  rels.reserve(A.relations().size());
  for (const auto& r : A.relations()) rels.push_back(reverse_relation(r));
  Algebra op = build_algebra(A.quiver().opposite(), rels, A.nilpotency(),
                             /*check_stability=*/false, /*check_associativity=*/false);
  if (op.dim() != A.dim())
    throw ComputeError("internal error: opposite algebra dimension changed");
  return op;
}

}  // namespace hart
