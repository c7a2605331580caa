#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "hart/algebra.hpp"

namespace hart {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr make_algebra(Algebra a) { return std::make_shared<Algebra>(std::move(a)); }

namespace detail {
inline std::map<const Algebra*, AlgebraPtr>& opposite_registry() {
  static std::map<const Algebra*, AlgebraPtr> reg;
  return reg;
}
}  // namespace detail

// Opposite algebra, memoized so that opposite_of(opposite_of(A)) is A itself.
inline AlgebraPtr opposite_of(const AlgebraPtr& A) {
  auto& reg = detail::opposite_registry();
  auto it = reg.find(A.get());
  if (it != reg.end()) return it->second;
  AlgebraPtr op = make_algebra(opposite_algebra(*A));
  reg[A.get()] = op;
  reg[op.get()] = A;
  return op;
}

// A finite-dimensional right module as a quiver representation: a space per
// vertex, and for each arrow a: i -> j a matrix mapping the i-space to the
// j-space (columns act on coordinates).
struct Rep {
  AlgebraPtr alg;
  std::vector<std::size_t> dims;  // by vertex index
  std::map<int, Mat> action;      // arrow id -> (dims[tgt] x dims[src])

  std::size_t total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
  }
  bool is_zero() const { return total_dim() == 0; }

  const Mat& act(int arrow_id) const { return action.at(arrow_id); }
};

inline Rep zero_rep(const AlgebraPtr& A) {
  Rep r{A, std::vector<std::size_t>(A->vertex_count(), 0), {}};
  for (const auto& a : A->quiver().arrows()) r.action.emplace(a.id, Mat(0, 0));
  return r;
}

inline Rep make_rep(const AlgebraPtr& A, std::vector<std::size_t> dims, std::map<int, Mat> action) {
  Rep r{A, std::move(dims), std::move(action)};
  if (r.dims.size() != A->vertex_count()) throw UsageError("dim vector length mismatch");
  for (const auto& a : A->quiver().arrows()) {
    auto it = r.action.find(a.id);
    std::size_t ds = r.dims[A->quiver().vertex_index(a.src)];
    std::size_t dt = r.dims[A->quiver().vertex_index(a.tgt)];
    if (it == r.action.end()) {
      r.action.emplace(a.id, Mat(dt, ds));
    } else if (it->second.rows() != dt || it->second.cols() != ds) {
      throw UsageError("action matrix shape mismatch for arrow " + a.label);
    }
  }
  return r;
}

// Matrix of the right action of a basis path on M, as a map from the source
// vertex space to the target vertex space.
inline Mat path_action(const Rep& M, const std::vector<int>& path, int src_vertex_index) {
  const auto& q = M.alg->quiver();
  Mat m = Mat::identity(M.dims[src_vertex_index]);
  for (int aid : path) m = M.act(aid) * m;
  (void)q;
  return m;
}

// Verifies that every defining relation acts as zero.
inline void validate_rep(const Rep& M) {
  const auto& q = M.alg->quiver();
  for (const auto& rel : M.alg->relations()) {
    int s = q.vertex_index(q.arrow_by_id(rel[0].path.front()).src);
    int t = q.vertex_index(q.arrow_by_id(rel[0].path.back()).tgt);
    Mat sum(M.dims[t], M.dims[s]);
    for (const auto& term : rel) sum = sum + path_action(M, term.path, s) * term.coef;
    if (!sum.is_zero()) throw UsageError("relation does not act as zero on the representation");
  }
}

// Morphism of representations: per-vertex components intertwining all arrows.
struct RepMap {
  Rep source, target;
  std::vector<Mat> comps;  // by vertex index, dims_target[i] x dims_source[i]

  bool is_zero() const {
    for (const auto& m : comps)
      if (!m.is_zero()) return false;
    return true;
  }
};

inline RepMap zero_map(const Rep& M, const Rep& N) {
  RepMap f{M, N, {}};
  for (std::size_t i = 0; i < M.dims.size(); ++i) f.comps.emplace_back(N.dims[i], M.dims[i]);
  return f;
}

inline RepMap identity_map(const Rep& M) {
  RepMap f{M, M, {}};
  for (std::size_t i = 0; i < M.dims.size(); ++i) f.comps.push_back(Mat::identity(M.dims[i]));
  return f;
}

inline RepMap compose(const RepMap& g, const RepMap& f) {  // g after f
  RepMap h{f.source, g.target, {}};
  for (std::size_t i = 0; i < f.comps.size(); ++i) h.comps.push_back(g.comps[i] * f.comps[i]);
  return h;
}

inline RepMap map_add(const RepMap& f, const RepMap& g, const Rational& c = 1) {
  RepMap h = f;
  for (std::size_t i = 0; i < h.comps.size(); ++i) h.comps[i] = h.comps[i] + g.comps[i] * c;
  return h;
}

inline RepMap map_scale(const RepMap& f, const Rational& c) {
  RepMap h = f;
  for (auto& m : h.comps) m = m * c;
  return h;
}

inline bool intertwines(const RepMap& f) {
  const auto& q = f.source.alg->quiver();
  for (const auto& a : q.arrows()) {
    int i = q.vertex_index(a.src), j = q.vertex_index(a.tgt);
    if (!(f.comps[j] * f.source.act(a.id) - f.target.act(a.id) * f.comps[i]).is_zero())
      return false;
  }
  return true;
}

inline std::size_t map_rank(const RepMap& f) {
  std::size_t r = 0;
  for (const auto& m : f.comps) r += rank(m);
  return r;
}
inline bool is_mono(const RepMap& f) { return map_rank(f) == f.source.total_dim(); }
inline bool is_epi(const RepMap& f) { return map_rank(f) == f.target.total_dim(); }
inline bool is_iso(const RepMap& f) {
  return f.source.dims == f.target.dims && is_mono(f);
}

// Basis of Hom(M, N) together with the RREF pivot data of the flattened
// basis, which lets coordinates be read off without solving.
struct HomBasis {
  std::vector<RepMap> maps;
  std::vector<std::size_t> pivots;  // pivot positions in the flattened maps
  std::size_t flat_len = 0;

  std::size_t dim() const { return maps.size(); }
  // Coordinates of a map known to lie in the span.
  Vec coords(const Vec& flat) const {
    Vec c(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) c[i] = flat[pivots[i]];
    return c;
  }
};

inline HomBasis hom_basis(const Rep& M, const Rep& N) {
  if (M.alg.get() != N.alg.get()) throw UsageError("hom_space: different algebras");
  const auto& q = M.alg->quiver();
  std::size_t V = M.dims.size();
  std::vector<std::size_t> off(V + 1, 0);
  for (std::size_t i = 0; i < V; ++i) off[i + 1] = off[i] + N.dims[i] * M.dims[i];
  std::size_t unknowns = off[V];
  if (unknowns == 0) return {{}, {}, 0};

  std::size_t eqs = 0;
  for (const auto& a : q.arrows())
    eqs += N.dims[q.vertex_index(a.tgt)] * M.dims[q.vertex_index(a.src)];
  Mat sys(eqs, unknowns);
  std::size_t row = 0;
  for (const auto& a : q.arrows()) {
    int i = q.vertex_index(a.src), j = q.vertex_index(a.tgt);
    const Mat& Ma = M.act(a.id);
    const Mat& Na = N.act(a.id);
    // f_j * Ma - Na * f_i = 0, entry (r, c) for r < N.dims[j], c < M.dims[i].
    for (std::size_t r = 0; r < N.dims[j]; ++r)
      for (std::size_t c = 0; c < M.dims[i]; ++c) {
        for (std::size_t k = 0; k < M.dims[j]; ++k)
          sys(row, off[j] + r * M.dims[j] + k) += Ma(k, c);
        for (std::size_t k = 0; k < N.dims[i]; ++k)
          sys(row, off[i] + k * M.dims[i] + c) -= Na(r, k);
        ++row;
      }
  }
  Mat ker = Subspace::kernel_matrix(sys);
  HomBasis hb;
  hb.flat_len = unknowns;
  hb.pivots = rref(ker).pivots;
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    RepMap f = zero_map(M, N);
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t r = 0; r < N.dims[i]; ++r)
        for (std::size_t c = 0; c < M.dims[i]; ++c)
          f.comps[i](r, c) = ker(b, off[i] + r * M.dims[i] + c);
    hb.maps.push_back(std::move(f));
  }
  return hb;
}

inline std::vector<RepMap> hom_space(const Rep& M, const Rep& N) {
  return hom_basis(M, N).maps;
}

inline std::size_t hom_dim(const Rep& M, const Rep& N) { return hom_space(M, N).size(); }

// Coordinates of f in a hom basis (flattened comparison).
inline Vec flatten_map(const RepMap& f) {
  Vec v;
  for (const auto& m : f.comps)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// ---- submodules and quotients ----------------------------------------------

// Submodule spanned by given invariant subspaces; returns (sub, inclusion).
inline std::pair<Rep, RepMap> sub_rep(const Rep& M, const std::vector<Subspace>& spaces) {
  const auto& q = M.alg->quiver();
  Rep S{M.alg, {}, {}};
  std::vector<Mat> bases;  // columns = basis vectors in M coordinates
  for (std::size_t i = 0; i < M.dims.size(); ++i) {
    S.dims.push_back(spaces[i].dim());
    bases.push_back(spaces[i].basis().transpose());
  }
  for (const auto& a : q.arrows()) {
    int i = q.vertex_index(a.src), j = q.vertex_index(a.tgt);
    Mat img = M.act(a.id) * bases[i];  // lands in span of bases[j]
    Mat X(S.dims[j], S.dims[i]);
    for (std::size_t c = 0; c < S.dims[i]; ++c) {
      auto sol = solve(bases[j], img.col(c));
      if (!sol) throw UsageError("sub_rep: subspaces are not invariant");
      for (std::size_t r = 0; r < S.dims[j]; ++r) X(r, c) = (*sol)[r];
    }
    S.action.emplace(a.id, std::move(X));
  }
  RepMap incl{S, M, {}};
  for (std::size_t i = 0; i < M.dims.size(); ++i) incl.comps.push_back(bases[i]);
  return {S, incl};
}

// Quotient of M by invariant subspaces; returns (quotient, projection).
inline std::pair<Rep, RepMap> quotient_rep(const Rep& M, const std::vector<Subspace>& spaces) {
  const auto& q = M.alg->quiver();
  std::size_t V = M.dims.size();
  // Complement coordinates: non-pivot standard coordinates after reduction.
  std::vector<Mat> proj(V), sect(V);
  Rep Q{M.alg, std::vector<std::size_t>(V, 0), {}};
  for (std::size_t i = 0; i < V; ++i) {
    const Subspace& W = spaces[i];
    std::vector<bool> is_pivot(M.dims[i], false);
    for (auto p : W.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < M.dims[i]; ++c)
      if (!is_pivot[c]) free.push_back(c);
    Q.dims[i] = free.size();
    // projection: eliminate pivot coordinates with W's rref rows, keep free.
    Mat P(free.size(), M.dims[i]);
    for (std::size_t c = 0; c < M.dims[i]; ++c) {
      Vec e(M.dims[i], Rational(0));
      e[c] = 1;
      for (std::size_t r = 0; r < W.dim(); ++r) {
        const Rational& coef = e[W.pivots()[r]];
        if (coef == 0) continue;
        Rational f = coef;
        for (std::size_t k = 0; k < M.dims[i]; ++k) e[k] -= f * W.basis()(r, k);
      }
      for (std::size_t r = 0; r < free.size(); ++r) P(r, c) = e[free[r]];
    }
    proj[i] = std::move(P);
    Mat S(M.dims[i], free.size());
    for (std::size_t r = 0; r < free.size(); ++r) S(free[r], r) = 1;
    sect[i] = std::move(S);
  }
  for (const auto& a : q.arrows()) {
    int i = q.vertex_index(a.src), j = q.vertex_index(a.tgt);
    Q.action.emplace(a.id, proj[j] * M.act(a.id) * sect[i]);
  }
  RepMap pi{M, Q, proj};
  return {Q, pi};
}

struct KernelResult {
  Rep rep;
  RepMap inclusion;  // rep -> source
};
inline KernelResult kernel(const RepMap& f) {
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < f.source.dims.size(); ++i) spaces.push_back(kernel_basis(f.comps[i]));
  auto [S, incl] = sub_rep(f.source, spaces);
  return {S, incl};
}

struct CokernelResult {
  Rep rep;
  RepMap projection;  // target -> rep
};
inline CokernelResult cokernel(const RepMap& f) {
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < f.target.dims.size(); ++i) {
    Mat rows = f.comps[i].transpose();
    spaces.emplace_back(f.target.dims[i], rows);
  }
  auto [Q, pi] = quotient_rep(f.target, spaces);
  return {Q, pi};
}

struct ImageResult {
  Rep rep;
  RepMap inclusion;     // rep -> target
  RepMap corestriction;  // source -> rep
};
inline ImageResult image(const RepMap& f) {
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < f.target.dims.size(); ++i)
    spaces.emplace_back(f.target.dims[i], f.comps[i].transpose());
  auto [S, incl] = sub_rep(f.target, spaces);
  RepMap co{f.source, S, {}};
  for (std::size_t i = 0; i < f.source.dims.size(); ++i) {
    Mat X(S.dims[i], f.source.dims[i]);
    for (std::size_t c = 0; c < f.source.dims[i]; ++c) {
      auto sol = solve(incl.comps[i], f.comps[i].col(c));
      for (std::size_t r = 0; r < S.dims[i]; ++r) X(r, c) = (*sol)[r];
    }
    co.comps.push_back(std::move(X));
  }
  return {S, incl, co};
}

// ---- canonical modules ------------------------------------------------------

inline Rep simple(const AlgebraPtr& A, int vertex_id) {
  int vi = A->quiver().vertex_index(vertex_id);
  Rep S = zero_rep(A);
  S.dims[vi] = 1;
  return make_rep(A, S.dims, {});
}

// P_i = e_i A, basis the normal-form paths starting at i.
inline Rep projective(const AlgebraPtr& A, int vertex_id) {
  const auto& q = A->quiver();
  int vi = q.vertex_index(vertex_id);
  std::size_t V = q.vertex_count();
  // Basis elements of e_i A grouped by target vertex.
  std::vector<std::vector<std::size_t>> mem(V);
  std::vector<std::size_t> pos(A->dim(), SIZE_MAX);
  for (std::size_t k = 0; k < A->dim(); ++k)
    if (A->basis_src(k) == vi) {
      pos[k] = mem[A->basis_tgt(k)].size();
      mem[A->basis_tgt(k)].push_back(k);
    }
  Rep P{A, {}, {}};
  for (std::size_t j = 0; j < V; ++j) P.dims.push_back(mem[j].size());
  for (const auto& a : q.arrows()) {
    int js = q.vertex_index(a.src), jt = q.vertex_index(a.tgt);
    Mat m(P.dims[jt], P.dims[js]);
    std::size_t ab = A->arrow_basis_index(a.id);
    for (std::size_t c = 0; c < mem[js].size(); ++c)
      for (const auto& [k, coef] : A->mult(mem[js][c], ab)) m(pos[k], c) = coef;
    P.action.emplace(a.id, std::move(m));
  }
  return P;
}

struct SummandDecomp {
  Rep sum;
  std::vector<RepMap> inclusions;
  std::vector<RepMap> projections;
};

inline SummandDecomp direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw UsageError("direct_sum of nothing; pass the algebra via zero_rep");
  AlgebraPtr A = parts[0].alg;
  std::size_t V = A->vertex_count();
  Rep S{A, std::vector<std::size_t>(V, 0), {}};
  std::vector<std::vector<std::size_t>> off(parts.size(), std::vector<std::size_t>(V, 0));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].alg.get() != A.get()) throw UsageError("direct_sum: different algebras");
    for (std::size_t i = 0; i < V; ++i) {
      off[p][i] = S.dims[i];
      S.dims[i] += parts[p].dims[i];
    }
  }
  const auto& q = A->quiver();
  for (const auto& a : q.arrows()) {
    int i = q.vertex_index(a.src), j = q.vertex_index(a.tgt);
    Mat m(S.dims[j], S.dims[i]);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Mat& blk = parts[p].act(a.id);
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) m(off[p][j] + r, off[p][i] + c) = blk(r, c);
    }
    S.action.emplace(a.id, std::move(m));
  }
  SummandDecomp d{S, {}, {}};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    RepMap incl{parts[p], S, {}}, proj{S, parts[p], {}};
    for (std::size_t i = 0; i < V; ++i) {
      Mat in(S.dims[i], parts[p].dims[i]), pr(parts[p].dims[i], S.dims[i]);
      for (std::size_t r = 0; r < parts[p].dims[i]; ++r) {
        in(off[p][i] + r, r) = 1;
        pr(r, off[p][i] + r) = 1;
      }
      incl.comps.push_back(std::move(in));
      proj.comps.push_back(std::move(pr));
    }
    d.inclusions.push_back(std::move(incl));
    d.projections.push_back(std::move(proj));
  }
  return d;
}

inline Rep regular_rep(const AlgebraPtr& A) {
  std::vector<Rep> parts;
  for (const auto& v : A->quiver().vertices()) parts.push_back(projective(A, v.id));
  return direct_sum(parts).sum;
}

// D = Hom_k(-, k): right A-modules to right A^op-modules; transposed actions.
inline Rep dualize(const Rep& M) {
  AlgebraPtr op = opposite_of(M.alg);
  Rep D{op, M.dims, {}};
  for (const auto& a : M.alg->quiver().arrows()) D.action.emplace(a.id, M.act(a.id).transpose());
  return D;
}

inline Rep injective(const AlgebraPtr& A, int vertex_id) {
  return dualize(projective(opposite_of(A), vertex_id));
}

// Dual of a map: D(f): D(target) -> D(source).
inline RepMap dualize_map(const RepMap& f) {
  RepMap d{dualize(f.target), dualize(f.source), {}};
  for (const auto& m : f.comps) d.comps.push_back(m.transpose());
  return d;
}

// ---- radical / socle / top --------------------------------------------------

inline std::pair<Rep, RepMap> radical(const Rep& M) {
  const auto& q = M.alg->quiver();
  std::size_t V = M.dims.size();
  std::vector<Mat> spans(V);
  for (std::size_t i = 0; i < V; ++i) spans[i] = Mat(0, M.dims[i]);
  for (const auto& a : q.arrows()) {
    int j = q.vertex_index(a.tgt);
    spans[j] = spans[j].vstack(M.act(a.id).transpose());
  }
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < V; ++i) spaces.emplace_back(M.dims[i], spans[i]);
  return sub_rep(M, spaces);
}

inline std::pair<Rep, RepMap> socle(const Rep& M) {
  const auto& q = M.alg->quiver();
  std::size_t V = M.dims.size();
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < V; ++i) {
    Mat stacked(0, M.dims[i]);
    for (const auto& a : q.arrows())
      if (q.vertex_index(a.src) == (int)i) stacked = stacked.vstack(M.act(a.id));
    spaces.push_back(stacked.rows() == 0 ? Subspace::full(M.dims[i]) : kernel_basis(stacked));
  }
  return sub_rep(M, spaces);
}

inline std::pair<Rep, RepMap> top(const Rep& M) {
  const auto& q = M.alg->quiver();
  std::size_t V = M.dims.size();
  std::vector<Mat> spans(V);
  for (std::size_t i = 0; i < V; ++i) spans[i] = Mat(0, M.dims[i]);
  for (const auto& a : q.arrows()) {
    int j = q.vertex_index(a.tgt);
    spans[j] = spans[j].vstack(M.act(a.id).transpose());
  }
  std::vector<Subspace> spaces;
  for (std::size_t i = 0; i < V; ++i) spaces.emplace_back(M.dims[i], spans[i]);
  auto [Q, pi] = quotient_rep(M, spaces);
  return {Q, pi};
}

// ---- exact sequences ---------------------------------------------------------

// Chain of maps with matching endpoints, leftmost map first:
// X_0 -> X_1 -> ... -> X_n.
struct ExactSeq {
  std::vector<RepMap> maps;

  bool is_complex() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
      if (!compose(maps[k + 1], maps[k]).is_zero()) return false;
    return true;
  }
  // Exactness at every interior object, by rank counts.
  bool is_exact_interior() const {
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
      std::size_t mid = maps[k].target.total_dim();
      if (map_rank(maps[k]) + map_rank(maps[k + 1]) != mid) return false;
      if (!compose(maps[k + 1], maps[k]).is_zero()) return false;
    }
    return true;
  }
  // Short/long exactness including injectivity of the first map and
  // surjectivity of the last.
  bool is_exact() const {
    if (maps.empty()) return true;
    return is_mono(maps.front()) && is_epi(maps.back()) && is_exact_interior();
  }
};

}  // namespace hart
