#pragma once

#include <string>
#include <vector>

#include "hart/decompose.hpp"
#include "hart/finalg.hpp"
#include "hart/rep.hpp"

namespace hart {

// Subspace spanned by products x*y, x in S1, y in S2.
inline Subspace subspace_product(const FiniteAlgebra& E, const Subspace& s1, const Subspace& s2) {
  Mat rows(0, E.dim);
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s2.dim(); ++j) {
      Vec p = E.multiply(s1.basis().row(i), s2.basis().row(j));
      rows = rows.vstack(Mat::from_rows({p}));
    }
  return Subspace(E.dim, rows);
}

// A quiver presentation of a basic finite-dimensional algebra, with the
// algebra isomorphism recorded on basis paths.
struct Presentation {
  AlgebraPtr algebra;
  std::vector<Vec> vertex_idems;   // coords in the source algebra, per vertex
  std::vector<Vec> arrow_images;   // per arrow (by dense index)
  std::vector<Vec> basis_images;   // per basis path of `algebra`
};

// Presents a basic algebra, given by structure constants and a complete set
// of orthogonal primitive idempotents, as a quiver with admissible relations.
// Vertices follow the idempotent order; arrows lift a basis of rad/rad^2;
// relations generate the kernel of the induced path-algebra surjection.
inline Presentation basic_presentation(const FiniteAlgebra& E, const std::vector<Vec>& idems,
                                       const std::vector<std::string>& vertex_labels = {}) {
  std::size_t d = E.dim;
  std::size_t r = idems.size();
  {
    Vec sum(d, Rational(0));
    for (const auto& e : idems)
      for (std::size_t k = 0; k < d; ++k) sum[k] += e[k];
    if (sum != E.unit) throw UsageError("idempotents do not sum to the unit");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Vec p = E.multiply(idems[i], idems[j]);
        if (i == j ? (p != idems[i]) : (p != Vec(d, Rational(0))))
          throw UsageError("idempotents are not orthogonal");
      }
  }

  Subspace rad = algebra_radical(E);
  Subspace rad2 = subspace_product(E, rad, rad);

  // Nilpotency degree of the radical.
  int nilp = 1;
  {
    Subspace pw = rad;
    while (pw.dim() > 0) {
      ++nilp;
      pw = subspace_product(E, pw, rad);
      if (nilp > static_cast<int>(d) + 1)
        throw ComputeError("radical is not nilpotent; input is not an algebra radical");
    }
  }

  Quiver q;
  for (std::size_t i = 0; i < r; ++i)
    q.add_vertex(static_cast<int>(i),
                 i < vertex_labels.size() ? vertex_labels[i] : std::to_string(i));

  // Arrows i -> j: a lift of a basis of e_i (rad/rad^2) e_j.
  std::vector<Vec> arrow_images;
  int next_arrow = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // Component projections of the radical basis.
      Mat r2rows(0, d);
      for (std::size_t k = 0; k < rad2.dim(); ++k) {
        Vec v = E.multiply(idems[i], E.multiply(rad2.basis().row(k), idems[j]));
        r2rows = r2rows.vstack(Mat::from_rows({v}));
      }
      Subspace comp2(d, r2rows);
      Subspace acc = comp2;
      for (std::size_t k = 0; k < rad.dim(); ++k) {
        Vec v = E.multiply(idems[i], E.multiply(rad.basis().row(k), idems[j]));
        if (acc.contains(v)) continue;
        acc = subspace_sum(acc, Subspace(d, Mat::from_rows({v})));
        q.add_arrow(next_arrow++, static_cast<int>(i), static_cast<int>(j));
        arrow_images.push_back(v);
      }
    }

  // Evaluate all paths of length < nilp and extract kernel generators.
  struct P {
    std::vector<int> arrows;
    int src, tgt;
    Vec image;
  };
  std::vector<P> paths;
  for (std::size_t i = 0; i < r; ++i)
    paths.push_back({{}, static_cast<int>(i), static_cast<int>(i), idems[i]});
  std::size_t deg_begin = 0, deg_end = paths.size();
  for (int len = 1; len < nilp; ++len) {
    std::size_t begin = paths.size();
    for (int aid = 0; aid < next_arrow; ++aid) {
      const Arrow& a = q.arrow_by_id(aid);
      for (std::size_t u = deg_begin; u < deg_end; ++u) {
        if (paths[u].src != a.tgt) continue;
        P p;
        p.arrows.push_back(aid);
        p.arrows.insert(p.arrows.end(), paths[u].arrows.begin(), paths[u].arrows.end());
        p.src = a.src;
        p.tgt = paths[u].tgt;
        p.image = E.multiply(arrow_images[aid], paths[u].image);
        paths.push_back(std::move(p));
      }
    }
    deg_begin = begin;
    deg_end = paths.size();
    if (paths.size() > 200000) throw ComputeError("presentation path space too large");
  }

  Mat eval(paths.size(), d);
  for (std::size_t k = 0; k < paths.size(); ++k)
    for (std::size_t c = 0; c < d; ++c) eval(k, c) = paths[k].image[c];
  Mat ker = Subspace::kernel_matrix(eval.transpose());

  // Greedy two-sided generators of the kernel.
  std::map<std::vector<int>, std::size_t> pindex;
  for (std::size_t k = 0; k < paths.size(); ++k)
    if (!paths[k].arrows.empty()) pindex[paths[k].arrows] = k;

  std::map<std::size_t, SVec> W;  // ideal span, pivot = largest path index
  auto insert_closure = [&](const std::map<std::size_t, Rational>& rel) {
    // span of p * rel * q over all path pairs, truncated at length nilp.
    for (std::size_t p = 0; p < paths.size(); ++p)
      for (std::size_t qq = 0; qq < paths.size(); ++qq) {
        std::map<std::size_t, Rational> v;
        bool any = false;
        for (const auto& [mid, coef] : rel) {
          if (paths[p].tgt != paths[mid].src || paths[mid].tgt != paths[qq].src) {
            v.clear();
            any = false;
            break;  // uniform source/target: either all terms compose or none
          }
          std::vector<int> w = paths[p].arrows;
          w.insert(w.end(), paths[mid].arrows.begin(), paths[mid].arrows.end());
          w.insert(w.end(), paths[qq].arrows.begin(), paths[qq].arrows.end());
          if (w.size() >= static_cast<std::size_t>(nilp)) continue;
          v[pindex.at(w)] += coef;
          any = true;
        }
        if (any) detail::echelon_insert(W, std::move(v));
      }
  };

  std::vector<PathComb> relations;
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    std::map<std::size_t, Rational> v;
    for (std::size_t k = 0; k < paths.size(); ++k)
      if (ker(b, k) != 0) v[k] = ker(b, k);
    detail::sweep_reduce(v, W);
    if (v.empty()) continue;
    PathComb rel;
    for (const auto& [k, c] : v) {
      if (paths[k].arrows.size() < 2)
        throw ComputeError("internal error: kernel generator of length < 2");
      rel.push_back({c, paths[k].arrows});
    }
    relations.push_back(rel);
    insert_closure(v);
  }

  Algebra A = build_algebra(q, relations, nilp, /*check_stability=*/false,
                            /*check_associativity=*/true);
  if (A.dim() != d)
    throw ComputeError("presentation dimension mismatch: got " + std::to_string(A.dim()) +
                       ", expected " + std::to_string(d));

  Presentation out;
  out.algebra = make_algebra(std::move(A));
  out.vertex_idems = idems;
  out.arrow_images = arrow_images;
  for (std::size_t k = 0; k < out.algebra->dim(); ++k) {
    const auto& bp = out.algebra->basis_paths()[k];
    if (bp.empty()) {
      out.basis_images.push_back(idems[out.algebra->basis_src(k)]);
    } else {
      Vec img = arrow_images[bp[0]];
      for (std::size_t t = 1; t < bp.size(); ++t) img = E.multiply(img, arrow_images[bp[t]]);
      out.basis_images.push_back(img);
    }
  }
  // The images of the basis must be linearly independent (so psi is an iso),
  // and psi must be multiplicative on basis pairs.
  {
    Mat rows(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) rows(k, c) = out.basis_images[k][c];
    if (rank(rows) != d) throw ComputeError("presentation witness is not bijective");
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        Vec lhs = E.multiply(out.basis_images[x], out.basis_images[y]);
        Vec rhs(d, Rational(0));
        for (const auto& [k, c] : out.algebra->mult(x, y))
          for (std::size_t t = 0; t < d; ++t) rhs[t] += c * out.basis_images[k][t];
        if (lhs != rhs) throw ComputeError("presentation witness is not multiplicative");
      }
  }
  return out;
}

// ---- endomorphism algebras ---------------------------------------------------

struct EndoPresentation {
  Presentation pres;
  Rep M_basic;                   // one copy of each isomorphism class
  std::vector<Rep> summands;     // vertex order
  std::vector<RepMap> incl, proj;  // split data of M_basic
  EndAlgebra end;                // End(M_basic), multiplication = composition
  std::vector<RepMap> arrow_maps;  // arrow alpha: i -> j as a map X_j -> X_i
};

// Quiver presentation of End(M) (of its basic version when M has repeated
// summands): vertices are the isomorphism classes of indecomposable summands,
// arrows a basis of rad End / rad^2 End.
inline EndoPresentation endomorphism_presentation(const Rep& M) {
  if (M.is_zero()) throw UsageError("endomorphism presentation of the zero module");
  EndoPresentation out;
  auto classes = decompose(M);
  for (auto& c : classes) out.summands.push_back(c.rep);
  auto ds = direct_sum(out.summands);
  out.M_basic = ds.sum;
  out.incl = ds.inclusions;
  out.proj = ds.projections;
  out.end = end_algebra(out.M_basic);

  std::vector<Vec> idems;
  for (std::size_t i = 0; i < out.summands.size(); ++i)
    idems.push_back(out.end.hom.coords(flatten_map(compose(out.incl[i], out.proj[i]))));
  FiniteAlgebra E = out.end.alg;
  out.pres = basic_presentation(E, idems);

  for (const auto& a : out.pres.algebra->quiver().arrows()) {
    RepMap u = end_element(out.M_basic, out.end, out.pres.arrow_images[a.id]);
    int i = a.src, j = a.tgt;
    out.arrow_maps.push_back(compose(out.proj[i], compose(u, out.incl[j])));
  }
  return out;
}

// Hom(M, X) as a right module over the presented endomorphism algebra:
// the i-th vertex space is Hom(X_i, X); the arrow alpha: i -> j acts by
// precomposition with the map X_j -> X_i it names.
inline Rep hom_functor(const EndoPresentation& P, const Rep& X) {
  std::size_t r = P.summands.size();
  std::vector<HomBasis> hb(r);
  Rep out{P.pres.algebra, std::vector<std::size_t>(r, 0), {}};
  for (std::size_t i = 0; i < r; ++i) {
    hb[i] = hom_basis(P.summands[i], X);
    out.dims[i] = hb[i].dim();
  }
  for (const auto& a : P.pres.algebra->quiver().arrows()) {
    int i = a.src, j = a.tgt;
    Mat m(out.dims[j], out.dims[i]);
    for (std::size_t c = 0; c < out.dims[i]; ++c) {
      Vec coords = hb[j].coords(flatten_map(compose(hb[i].maps[c], P.arrow_maps[a.id])));
      for (std::size_t rr = 0; rr < out.dims[j]; ++rr) m(rr, c) = coords[rr];
    }
    out.action.emplace(a.id, std::move(m));
  }
  return out;
}

inline RepMap hom_functor_map(const EndoPresentation& P, const RepMap& f, const Rep& FX,
                              const Rep& FY) {
  std::size_t r = P.summands.size();
  RepMap g{FX, FY, {}};
  for (std::size_t i = 0; i < r; ++i) {
    HomBasis hx = hom_basis(P.summands[i], f.source);
    HomBasis hy = hom_basis(P.summands[i], f.target);
    Mat m(FY.dims[i], FX.dims[i]);
    for (std::size_t c = 0; c < FX.dims[i]; ++c) {
      Vec coords = hy.coords(flatten_map(compose(f, hx.maps[c])));
      for (std::size_t rr = 0; rr < FY.dims[i]; ++rr) m(rr, c) = coords[rr];
    }
    g.comps.push_back(std::move(m));
  }
  return g;
}

}  // namespace hart
