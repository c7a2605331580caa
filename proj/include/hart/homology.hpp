#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hart/decompose.hpp"
#include "hart/rep.hpp"

namespace hart {

// Homological dimension, possibly only bounded below ("value" = the cap).
struct DimBound {
  long value = 0;
  bool at_least = false;  // true: the honest answer is >= value

  bool le(long n) const { return !at_least && value <= n; }
  bool lt(long n) const { return !at_least && value < n; }
  bool eq(long n) const { return !at_least && value == n; }
  std::string str() const { return (at_least ? ">= " : "") + std::to_string(value); }
};

inline constexpr long kDefaultDepthCap = 32;

// ---- covers and envelopes ----------------------------------------------------

struct CoverData {
  Rep P;
  RepMap onto;   // P -> M
  Rep K;         // kernel
  RepMap kincl;  // K -> P
};

// Minimal projective cover: P = sum of P_i to the multiplicities of top(M),
// mapping chosen generators onto radical complements.
inline CoverData projective_cover(const Rep& M) {
  const AlgebraPtr& A = M.alg;
  const auto& q = A->quiver();
  std::size_t V = M.dims.size();
  // Radical subspaces and complement generators per vertex.
  std::vector<Mat> spans(V);
  for (std::size_t i = 0; i < V; ++i) spans[i] = Mat(0, M.dims[i]);
  for (const auto& a : q.arrows()) {
    int j = q.vertex_index(a.tgt);
    spans[j] = spans[j].vstack(M.act(a.id).transpose());
  }
  std::vector<Rep> parts;
  std::vector<std::pair<int, Vec>> gens;  // (vertex index, generator in M_i)
  for (std::size_t i = 0; i < V; ++i) {
    Subspace rad(M.dims[i], spans[i]);
    std::vector<bool> is_pivot(M.dims[i], false);
    for (auto p : rad.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < M.dims[i]; ++c)
      if (!is_pivot[c]) {
        Vec g(M.dims[i], Rational(0));
        g[c] = 1;
        parts.push_back(projective(A, q.vertices()[i].id));
        gens.emplace_back(static_cast<int>(i), g);
      }
  }
  CoverData out;
  if (parts.empty()) {
    out.P = zero_rep(A);
    out.onto = zero_map(out.P, M);
    out.K = zero_rep(A);
    out.kincl = zero_map(out.K, out.P);
    return out;
  }
  auto ds = direct_sum(parts);
  out.P = ds.sum;
  // Map P_i -> M sending e_i to the generator: basis path p (i -> j) goes to
  // generator * act(p).
  RepMap f = zero_map(out.P, M);
  for (std::size_t t = 0; t < parts.size(); ++t) {
    auto [vi, gen] = gens[t];
    const Rep& Pi = parts[t];
    // Enumerate the basis of P_i grouped by target vertex, in the same order
    // used by projective().
    std::vector<std::size_t> count(V, 0);
    for (std::size_t k = 0; k < A->dim(); ++k) {
      if (A->basis_src(k) != vi) continue;
      int j = A->basis_tgt(k);
      Vec img = path_action(M, A->basis_paths()[k], vi).apply(gen);
      std::size_t col = count[j]++;
      // place into component j at the block offset of part t
      std::size_t off = 0;
      for (std::size_t s = 0; s < t; ++s) off += parts[s].dims[j];
      for (std::size_t r = 0; r < M.dims[j]; ++r) f.comps[j](r, off + col) += img[r];
    }
    (void)Pi;
  }
  out.onto = std::move(f);
  if (!is_epi(out.onto)) throw ComputeError("internal error: projective cover not onto");
  auto ker = kernel(out.onto);
  out.K = ker.rep;
  out.kincl = ker.inclusion;
  return out;
}

struct EnvelopeData {
  Rep I;
  RepMap into;  // M -> I
};

inline EnvelopeData injective_envelope(const Rep& M) {
  Rep DM = dualize(M);
  CoverData c = projective_cover(DM);
  EnvelopeData e;
  e.I = dualize(c.P);
  RepMap into{M, e.I, {}};
  for (const auto& m : c.onto.comps) into.comps.push_back(m.transpose());
  e.into = std::move(into);
  if (!is_mono(e.into)) throw ComputeError("internal error: injective envelope not mono");
  return e;
}

inline bool is_projective_rep(const Rep& M) {
  if (M.is_zero()) return true;
  return is_iso(projective_cover(M).onto);
}
inline bool is_injective_rep(const Rep& M) { return is_projective_rep(dualize(M)); }

// Drop the projective direct summands (stable-category convention).
inline Rep strip_projective_summands(const Rep& M) {
  if (M.is_zero()) return M;
  std::vector<Rep> keep;
  for (const auto& s : decompose_full(M))
    if (!is_projective_rep(s.rep)) keep.push_back(s.rep);
  if (keep.empty()) return zero_rep(M.alg);
  return direct_sum(keep).sum;
}
inline Rep strip_injective_summands(const Rep& M) {
  if (M.is_zero()) return M;
  std::vector<Rep> keep;
  for (const auto& s : decompose_full(M))
    if (!is_injective_rep(s.rep)) keep.push_back(s.rep);
  if (keep.empty()) return zero_rep(M.alg);
  return direct_sum(keep).sum;
}

// ---- resolutions --------------------------------------------------------------

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, truncated at
// `depth` terms (P_0 .. P_depth) or earlier when the kernel vanishes.
struct Resolution {
  Rep target;
  std::vector<Rep> terms;
  std::vector<RepMap> maps;  // maps[0]: terms[0] -> target; maps[k]: terms[k] -> terms[k-1]
  bool finite = false;       // the resolution stops inside the computed range
  bool minimal = true;
};

inline Resolution projective_resolution(const Rep& M, long depth = kDefaultDepthCap) {
  Resolution res;
  res.target = M;
  Rep X = M;
  RepMap incl;  // K -> P of the previous stage
  for (long k = 0; k <= depth; ++k) {
    CoverData c = projective_cover(X);
    if (k == 0) {
      res.maps.push_back(c.onto);
    } else {
      res.maps.push_back(compose(incl, c.onto));
    }
    res.terms.push_back(c.P);
    if (c.K.is_zero()) {
      res.finite = true;
      break;
    }
    X = c.K;
    incl = c.kincl;
  }
  return res;
}

// Minimal injective coresolution 0 -> M -> I^0 -> I^1 -> ...; maps[0] is the
// envelope embedding and maps[k]: I^{k-1} -> I^k.
inline Resolution injective_coresolution(const Rep& M, long depth = kDefaultDepthCap) {
  Resolution pr = projective_resolution(dualize(M), depth);
  Resolution res;
  res.target = M;
  res.finite = pr.finite;
  for (const auto& t : pr.terms) res.terms.push_back(dualize(t));
  for (const auto& m : pr.maps) {
    RepMap d{dualize(m.target), dualize(m.source), {}};
    for (const auto& c : m.comps) d.comps.push_back(c.transpose());
    res.maps.push_back(std::move(d));
  }
  res.maps[0].source = M;  // D(D(M)) is M on the nose
  return res;
}

inline DimBound pd(const Rep& M, long cap = kDefaultDepthCap) {
  if (M.is_zero()) return {0, false};
  Rep X = M;
  for (long k = 0; k <= cap; ++k) {
    CoverData c = projective_cover(X);
    if (c.K.is_zero()) return {k, false};
    X = c.K;
  }
  return {cap, true};
}

inline DimBound injective_dim(const Rep& M, long cap = kDefaultDepthCap) {
  return pd(dualize(M), cap);
}

inline DimBound gl_dim(const AlgebraPtr& A, long cap = kDefaultDepthCap) {
  DimBound best{0, false};
  for (const auto& v : A->quiver().vertices()) {
    DimBound d = pd(simple(A, v.id), cap);
    if (d.at_least) return d;
    if (d.value > best.value) best = d;
  }
  return best;
}

// ---- syzygies ------------------------------------------------------------------

// Omega^0 strips projective summands (stable convention); higher syzygies
// are the kernels of the minimal covers, kept as computed.
inline Rep syzygy(const Rep& M, long k = 1) {
  if (k < 0) throw UsageError("syzygy: negative index");
  Rep X = strip_projective_summands(M);
  for (long t = 0; t < k; ++t) {
    if (X.is_zero()) return X;
    X = projective_cover(X).K;
  }
  return X;
}

inline Rep cosyzygy(const Rep& M, long k = 1) {
  return dualize(syzygy(dualize(M), k));
}

// ---- Ext ------------------------------------------------------------------------

// dim Ext^i(X, Y) through the minimal projective resolution of X.
inline std::size_t ext_dim(const Rep& X, const Rep& Y, long i, long cap = kDefaultDepthCap) {
  if (i < 0) throw UsageError("ext_dim: negative degree");
  if (X.is_zero() || Y.is_zero()) return 0;
  Resolution res = projective_resolution(X, std::min(cap, i + 1));
  if (static_cast<std::size_t>(i) >= res.terms.size()) return 0;
  auto induced = [&](long k) -> Mat {  // Hom(P_{k-1}, Y) -> Hom(P_k, Y)
    HomBasis from = hom_basis(res.terms[k - 1], Y);
    HomBasis to = hom_basis(res.terms[k], Y);
    Mat m(to.dim(), from.dim());
    for (std::size_t c = 0; c < from.dim(); ++c) {
      Vec coords = to.coords(flatten_map(compose(from.maps[c], res.maps[k])));
      for (std::size_t r = 0; r < to.dim(); ++r) m(r, c) = coords[r];
    }
    return m;
  };
  std::size_t hom_i = hom_dim(res.terms[i], Y);
  std::size_t ker;
  if (static_cast<std::size_t>(i + 1) < res.terms.size()) {
    ker = hom_i - rank(induced(i + 1));
  } else {
    ker = hom_i;  // resolution stopped: next term is zero
  }
  std::size_t im = (i == 0) ? 0 : rank(induced(i));
  return ker - im;
}

// ---- the (-)^* = Hom(-, A) functor into modules over A^op ----------------------

// Left multiplication by the arrow a, as a module map e_{tgt}A -> e_{src}A.
inline RepMap left_mult_by_arrow(const AlgebraPtr& A, int arrow_id) {
  const auto& q = A->quiver();
  const Arrow& ar = q.arrow_by_id(arrow_id);
  Rep Pt = projective(A, ar.tgt), Ps = projective(A, ar.src);
  int si = q.vertex_index(ar.src), ti = q.vertex_index(ar.tgt);
  std::size_t V = q.vertex_count();
  std::vector<std::vector<std::size_t>> mem_t(V), mem_s(V);
  std::vector<std::size_t> pos(A->dim(), SIZE_MAX);
  for (std::size_t k = 0; k < A->dim(); ++k) {
    if (A->basis_src(k) == ti) mem_t[A->basis_tgt(k)].push_back(k);
    if (A->basis_src(k) == si) {
      pos[k] = mem_s[A->basis_tgt(k)].size();
      mem_s[A->basis_tgt(k)].push_back(k);
    }
  }
  RepMap L = zero_map(Pt, Ps);
  std::size_t ab = A->arrow_basis_index(arrow_id);
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t c = 0; c < mem_t[v].size(); ++c)
      for (const auto& [k, coef] : A->mult(ab, mem_t[v][c])) L.comps[v](pos[k], c) = coef;
  return L;
}

// Hom_A(M, A) as a right A^op-module: the i-th vertex space is Hom(M, e_i A)
// and the opposite arrow a acts by postcomposing left multiplication by a.
inline Rep star_module(const Rep& M) {
  const AlgebraPtr& A = M.alg;
  AlgebraPtr op = opposite_of(A);
  const auto& q = A->quiver();
  std::size_t V = q.vertex_count();
  std::vector<HomBasis> hb(V);
  Rep out{op, std::vector<std::size_t>(V, 0), {}};
  for (std::size_t i = 0; i < V; ++i) {
    hb[i] = hom_basis(M, projective(A, q.vertices()[i].id));
    out.dims[i] = hb[i].dim();
  }
  for (const auto& a : q.arrows()) {
    // a^op runs from vertex tgt(a) to vertex src(a).
    int i = q.vertex_index(a.tgt), j = q.vertex_index(a.src);
    RepMap L = left_mult_by_arrow(A, a.id);
    Mat m(out.dims[j], out.dims[i]);
    for (std::size_t c = 0; c < out.dims[i]; ++c) {
      Vec coords = hb[j].coords(flatten_map(compose(L, hb[i].maps[c])));
      for (std::size_t r = 0; r < out.dims[j]; ++r) m(r, c) = coords[r];
    }
    out.action.emplace(a.id, std::move(m));
  }
  return out;
}

// Contravariant action on maps: star_map(f): N^* -> M^* for f: M -> N.
// Callers pass the already-computed star modules of target and source.
inline RepMap star_map(const RepMap& f, const Rep& starN, const Rep& starM) {
  const AlgebraPtr& A = f.source.alg;
  const auto& q = A->quiver();
  std::size_t V = q.vertex_count();
  RepMap g{starN, starM, {}};
  for (std::size_t i = 0; i < V; ++i) {
    Rep Pi = projective(A, q.vertices()[i].id);
    HomBasis hn = hom_basis(f.target, Pi);
    HomBasis hm = hom_basis(f.source, Pi);
    if (starN.dims[i] != hn.dim() || starM.dims[i] != hm.dim())
      throw UsageError("star_map: star modules do not match the map");
    Mat m(starM.dims[i], starN.dims[i]);
    for (std::size_t c = 0; c < starN.dims[i]; ++c) {
      Vec coords = hm.coords(flatten_map(compose(hn.maps[c], f)));
      for (std::size_t r = 0; r < starM.dims[i]; ++r) m(r, c) = coords[r];
    }
    g.comps.push_back(std::move(m));
  }
  return g;
}

// Ext^i(X, A) as a right A^op-module (homology of the dualized resolution).
inline Rep ext_op_module(const Rep& X, long i, long cap = kDefaultDepthCap) {
  AlgebraPtr op = opposite_of(X.alg);
  Resolution res = projective_resolution(X, std::min(cap, i + 1));
  if (static_cast<std::size_t>(i) >= res.terms.size()) return zero_rep(op);
  std::vector<Rep> stars;
  for (const auto& t : res.terms) stars.push_back(star_module(t));
  // Kernel of star(maps[i+1]) inside star(P_i).
  Rep Zi = stars[i];
  RepMap z_incl = identity_map(Zi);
  if (static_cast<std::size_t>(i + 1) < res.terms.size()) {
    // star of maps[i+1]: terms[i+1] -> terms[i] runs stars[i] -> stars[i+1].
    auto K = kernel(star_map(res.maps[i + 1], stars[i], stars[i + 1]));
    Zi = K.rep;
    z_incl = K.inclusion;
  }
  if (i == 0) return Zi;
  // Image of star(maps[i]): stars[i-1] -> stars[i], expressed inside the kernel.
  RepMap bi = star_map(res.maps[i], stars[i - 1], stars[i]);
  // bi: star(P_{i-1}) -> star(P_i); its image lies in Zi.
  std::vector<Subspace> img;
  for (std::size_t v = 0; v < Zi.dims.size(); ++v) {
    Mat cols(Zi.dims[v], bi.comps[v].cols());
    for (std::size_t c = 0; c < bi.comps[v].cols(); ++c) {
      auto sol = solve(z_incl.comps[v], bi.comps[v].col(c));
      if (!sol) throw ComputeError("internal error: boundary not inside cycles");
      for (std::size_t r = 0; r < Zi.dims[v]; ++r) cols(r, c) = (*sol)[r];
    }
    img.emplace_back(Zi.dims[v], cols.transpose());
  }
  return quotient_rep(Zi, img).first;
}

// ---- transpose and the AR translations -----------------------------------------

inline Rep transpose(const Rep& M) {
  CoverData c0 = projective_cover(M);
  CoverData c1 = projective_cover(c0.K);
  RepMap g = compose(c0.kincl, c1.onto);  // P_1 -> P_0
  Rep s0 = star_module(c0.P), s1 = star_module(c1.P);
  RepMap gs = star_map(g, s0, s1);
  return cokernel(gs).rep;
}

inline Rep tau(const Rep& M) { return dualize(transpose(M)); }
inline Rep tau_inv(const Rep& M) { return transpose(dualize(M)); }

inline Rep tau_n(const Rep& M, long n) {
  if (n < 1) throw UsageError("tau_n: n must be >= 1");
  return tau(syzygy(M, n - 1));
}
inline Rep tau_n_inv(const Rep& M, long n) {
  if (n < 1) throw UsageError("tau_n_inv: n must be >= 1");
  return tau_inv(cosyzygy(M, n - 1));
}

// ---- stable and costable hom dimensions -----------------------------------------

// dim of the subspace of Hom(M, N) of maps factoring through a projective
// (equivalently through the projective cover of N).
inline std::size_t proj_factoring_dim(const Rep& M, const Rep& N) {
  CoverData c = projective_cover(N);
  auto through = hom_space(M, c.P);
  if (through.empty()) return 0;
  Mat rows(through.size(), flatten_map(zero_map(M, N)).size());
  for (std::size_t t = 0; t < through.size(); ++t) {
    Vec fl = flatten_map(compose(c.onto, through[t]));
    for (std::size_t c2 = 0; c2 < fl.size(); ++c2) rows(t, c2) = fl[c2];
  }
  return rank(rows);
}

inline std::size_t stable_hom_dim(const Rep& M, const Rep& N) {
  return hom_dim(M, N) - proj_factoring_dim(M, N);
}

inline std::size_t inj_factoring_dim(const Rep& M, const Rep& N) {
  EnvelopeData e = injective_envelope(M);
  auto through = hom_space(e.I, N);
  if (through.empty()) return 0;
  Mat rows(through.size(), flatten_map(zero_map(M, N)).size());
  for (std::size_t t = 0; t < through.size(); ++t) {
    Vec fl = flatten_map(compose(through[t], e.into));
    for (std::size_t c2 = 0; c2 < fl.size(); ++c2) rows(t, c2) = fl[c2];
  }
  return rank(rows);
}

inline std::size_t costable_hom_dim(const Rep& M, const Rep& N) {
  return hom_dim(M, N) - inj_factoring_dim(M, N);
}

// ---- dominant dimension and the homological conditions --------------------------

inline DimBound dom_dim(const AlgebraPtr& A, long cap = kDefaultDepthCap) {
  Resolution res = injective_coresolution(regular_rep(A), cap);
  for (std::size_t k = 0; k < res.terms.size(); ++k)
    if (!is_projective_rep(res.terms[k])) return {static_cast<long>(k), false};
  return {cap, true};  // all computed terms projective (semisimple-like tail)
}

struct MnReport {
  bool holds = false;
  std::vector<DimBound> pds;  // pd of I_0 .. I_{n-1}
};

// (m, n)-condition: pd I_i < m for 0 <= i < n in the minimal injective
// resolution of A.
inline MnReport mn_condition_one_sided(const AlgebraPtr& A, long m, long n,
                                       long cap = kDefaultDepthCap) {
  MnReport rep;
  Resolution res = injective_coresolution(regular_rep(A), std::min(cap, n));
  rep.holds = true;
  for (long i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) >= res.terms.size()) break;  // resolution ended: terms are 0
    DimBound d = pd(res.terms[i], cap);
    rep.pds.push_back(d);
    if (!d.lt(m)) rep.holds = false;
  }
  return rep;
}

inline bool mn_condition(const AlgebraPtr& A, long m, long n, bool two_sided = true,
                         long cap = kDefaultDepthCap) {
  if (m < 1 || n < 1) throw UsageError("mn_condition: m, n must be >= 1");
  bool h = mn_condition_one_sided(A, m, n, cap).holds;
  if (!two_sided) return h;
  return h && mn_condition_one_sided(opposite_of(A), m, n, cap).holds;
}

struct GorensteinVerdict {
  int vertex_id = 0;
  bool applicable = true;  // pd S = n when restricted
  bool holds = true;
  std::vector<std::size_t> ext_dims;  // dim Ext^i(S, A), 0 <= i <= n
};

struct GorensteinReport {
  bool holds = true;
  long n = 0;
  std::vector<GorensteinVerdict> verdicts;     // over A
  std::vector<GorensteinVerdict> op_verdicts;  // over A^op
};

namespace detail {
inline void gorenstein_side(const AlgebraPtr& A, long n, bool restricted, long cap,
                            std::vector<GorensteinVerdict>& out, bool& all) {
  Rep reg = regular_rep(A);
  for (const auto& v : A->quiver().vertices()) {
    GorensteinVerdict gv;
    gv.vertex_id = v.id;
    Rep S = simple(A, v.id);
    if (restricted) {
      DimBound d = pd(S, cap);
      gv.applicable = d.eq(n);
    }
    if (gv.applicable) {
      for (long i = 0; i <= n; ++i) {
        std::size_t e = ext_dim(S, reg, i, cap);
        gv.ext_dims.push_back(e);
        if (i < n && e != 0) gv.holds = false;
      }
      Rep top_ext = ext_op_module(S, n, cap);
      if (top_ext.total_dim() != 1) gv.holds = false;  // simple over a basic algebra
      all = all && gv.holds;
    }
    out.push_back(std::move(gv));
  }
}
}  // namespace detail

// Gorenstein condition for gl.dim A = n < infinity: every (restricted:
// pd-S = n) simple has Ext^i(S, A) = 0 for i != n and Ext^n(S, A) simple over
// the opposite side; checked on both sides.
inline GorensteinReport gorenstein_condition(const AlgebraPtr& A, bool restricted,
                                             long cap = kDefaultDepthCap) {
  GorensteinReport rep;
  DimBound g = gl_dim(A, cap);
  if (g.at_least) throw ComputeError("gorenstein_condition requires finite global dimension");
  rep.n = g.value;
  detail::gorenstein_side(A, rep.n, restricted, cap, rep.verdicts, rep.holds);
  detail::gorenstein_side(opposite_of(A), rep.n, restricted, cap, rep.op_verdicts, rep.holds);
  return rep;
}

// ---- extensions -----------------------------------------------------------------

// Basis of Ext^1(X, Z) as cocycles Omega X -> Z (maps from the kernel of the
// projective cover, modulo those extending to the cover).
struct Ext1Basis {
  CoverData cover;               // of X
  std::vector<RepMap> cocycles;  // K -> Z representatives
};

inline Ext1Basis ext1_basis(const Rep& X, const Rep& Z) {
  Ext1Basis out;
  out.cover = projective_cover(X);
  auto all = hom_space(out.cover.K, Z);
  if (all.empty()) return out;
  std::size_t flat = flatten_map(zero_map(out.cover.K, Z)).size();
  auto lifts = hom_space(out.cover.P, Z);
  Mat acc(0, flat);
  for (const auto& l : lifts) {
    Vec fl = flatten_map(compose(l, out.cover.kincl));
    acc = acc.vstack(Mat::from_rows({fl}));
  }
  Subspace extendable(flat, acc);
  Subspace span = extendable;
  for (const auto& f : all) {
    Vec fl = flatten_map(f);
    if (span.contains(fl)) continue;
    span = subspace_sum(span, Subspace(flat, Mat::from_rows({fl})));
    out.cocycles.push_back(f);
  }
  return out;
}

// Realize the extension 0 -> Z -> E -> X -> 0 attached to a cocycle
// f: K -> Z by pushing the cover sequence out along f.
inline ExactSeq extension_from_cocycle(const Rep& X, const Rep& Z, const Ext1Basis& eb,
                                       const RepMap& f) {
  const CoverData& c = eb.cover;
  auto ds = direct_sum({Z, c.P});
  // h: K -> Z + P, k |-> (-f(k), incl(k)); E = coker h.
  RepMap h =
      map_add(compose(ds.inclusions[1], c.kincl), compose(ds.inclusions[0], f), Rational(-1));
  auto ck = cokernel(h);
  // u: Z -> E and v: E -> X with v([z, p]) = onto(p).
  RepMap u = compose(ck.projection, ds.inclusions[0]);
  // Section of the cokernel projection: solve on each vertex.
  RepMap v{ck.rep, X, {}};
  for (std::size_t i = 0; i < ck.rep.dims.size(); ++i) {
    // projection comps: E_amb -> C; find any preimage matrix (right inverse).
    Mat pr = ck.projection.comps[i];
    Mat sec(pr.cols(), pr.rows());
    for (std::size_t col = 0; col < pr.rows(); ++col) {
      Vec e(pr.rows(), Rational(0));
      e[col] = 1;
      auto sol = solve(pr, e);
      if (!sol) throw ComputeError("internal error: cokernel projection not onto");
      for (std::size_t r = 0; r < pr.cols(); ++r) sec(r, col) = (*sol)[r];
    }
    Mat zp = compose(c.onto, ds.projections[1]).comps[i];
    v.comps.push_back(zp * sec);
  }
  return ExactSeq{{u, v}};
}

}  // namespace hart
