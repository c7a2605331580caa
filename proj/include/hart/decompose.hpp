#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hart/finalg.hpp"
#include "hart/rep.hpp"

namespace hart {

inline unsigned& global_seed() {
  static unsigned seed = 0;
  return seed;
}
inline void set_global_seed(unsigned s) { global_seed() = s; }

// End(M) with composition as multiplication (x*y = x after y).
struct EndAlgebra {
  HomBasis hom;
  FiniteAlgebra alg;
};

inline EndAlgebra end_algebra(const Rep& M) {
  EndAlgebra E;
  E.hom = hom_basis(M, M);
  std::size_t d = E.hom.dim();
  E.alg.dim = d;
  E.alg.table.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = E.hom.coords(flatten_map(compose(E.hom.maps[i], E.hom.maps[j])));
      SVec s;
      for (std::size_t k = 0; k < d; ++k)
        if (c[k] != 0) s.emplace_back(k, c[k]);
      E.alg.table[i * d + j] = std::move(s);
    }
  E.alg.unit = E.hom.coords(flatten_map(identity_map(M)));
  return E;
}

inline RepMap end_element(const Rep& M, const EndAlgebra& E, const Vec& coords) {
  RepMap f = zero_map(M, M);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) f = map_add(f, E.hom.maps[i], coords[i]);
  return f;
}

// Evaluate a polynomial at an endomorphism.
inline RepMap poly_at(const QPoly& p, const RepMap& f) {
  RepMap r = zero_map(f.source, f.source);
  RepMap id = identity_map(f.source);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r = compose(f, r);
    r = map_add(r, id, *it);
  }
  return r;
}

// A direct summand with its split embedding data (proj o incl = id).
struct Summand {
  Rep rep;
  RepMap incl;  // rep -> ambient
  RepMap proj;  // ambient -> rep
  bool local_certified = true;  // End(rep)/rad one-dimensional or a certified field
};

namespace detail {

// Fitting decomposition along f: M = ker f^m + im f^m once the rank is
// stable. Returns the two split summands, or nothing when trivial.
struct FittingSplit {
  Summand part0, part1;
};

inline std::optional<FittingSplit> fitting_split(const Rep& M, RepMap f) {
  std::size_t n = M.total_dim();
  // f^(2^k) with 2^k >= n; ranks are stable from n on.
  for (std::size_t pw = 1; pw < n; pw *= 2) f = compose(f, f);
  auto K = kernel(f);
  std::size_t dk = K.rep.total_dim();
  if (dk == 0 || dk == n) return std::nullopt;
  auto I = image(f);

  FittingSplit s;
  s.part0 = {K.rep, K.inclusion, {}, true};
  s.part1 = {I.rep, I.inclusion, {}, true};
  // Projections from the inverse of the combined change of basis.
  RepMap p0{M, K.rep, {}}, p1{M, I.rep, {}};
  for (std::size_t v = 0; v < M.dims.size(); ++v) {
    Mat T = K.inclusion.comps[v].hstack(I.inclusion.comps[v]);
    if (T.rows() != T.cols()) return std::nullopt;  // not a direct decomposition
    Mat Ti = inverse(T);
    Mat a(K.rep.dims[v], M.dims[v]), b(I.rep.dims[v], M.dims[v]);
    for (std::size_t r = 0; r < K.rep.dims[v]; ++r)
      for (std::size_t c = 0; c < M.dims[v]; ++c) a(r, c) = Ti(r, c);
    for (std::size_t r = 0; r < I.rep.dims[v]; ++r)
      for (std::size_t c = 0; c < M.dims[v]; ++c) b(r, c) = Ti(K.rep.dims[v] + r, c);
    p0.comps.push_back(std::move(a));
    p1.comps.push_back(std::move(b));
  }
  s.part0.proj = std::move(p0);
  s.part1.proj = std::move(p1);
  return s;
}

// Search for a splitting endomorphism; nullopt means indecomposable as far
// as the candidate ladder can tell (sets *certified per the radical quotient).
inline std::optional<FittingSplit> try_split(const Rep& M, bool* local_certified) {
  *local_certified = true;
  EndAlgebra E = end_algebra(M);
  std::size_t d = E.alg.dim;
  if (d == 0) return std::nullopt;
  if (d == 1) return std::nullopt;  // End = k, local

  auto attempt = [&](const RepMap& f) -> std::optional<FittingSplit> {
    if (f.is_zero()) return std::nullopt;
    return fitting_split(M, f);
  };

  std::vector<Vec> pool;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, Rational(0));
    e[i] = 1;
    pool.push_back(e);
  }
  std::mt19937 rng(0x9e3779b9u ^ global_seed());
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < 48; ++t) {
    Vec v(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) v[i] = coeff(rng);
    pool.push_back(v);
  }
  for (std::size_t i = 0; i < d && pool.size() < 400; ++i)
    for (std::size_t j = 0; j < d && pool.size() < 400; ++j) {
      if (i == j) continue;
      Vec e(d, Rational(0));
      e[i] = 1;
      Vec g(d, Rational(0));
      g[j] = 1;
      pool.push_back(E.alg.multiply(e, g));
    }

  for (const auto& coords : pool) {
    RepMap f = end_element(M, E, coords);
    if (auto s = attempt(f)) return s;
    QPoly mu = algebra_min_poly(E.alg, coords);
    auto roots = qp_rational_roots(mu);
    if (roots) {
      for (const auto& r : *roots) {
        RepMap shifted = map_add(f, identity_map(M), -r);
        if (auto s = attempt(shifted)) return s;
      }
    }
    // Squarefree parts and, as a last resort, full factors.
    for (const auto& [q, mult] : qp_squarefree(mu)) {
      if (qp_deg(q) == qp_deg(mu)) continue;
      RepMap part = poly_at(q, f);
      for (int k = 1; k < mult; ++k) part = compose(part, poly_at(q, f));
      if (auto s = attempt(part)) return s;
    }
    if (auto factors = qp_factor(mu)) {
      if (factors->size() > 1)
        for (const auto& p : *factors)
          if (auto s = attempt(poly_at(p, f))) return s;
    }
  }

  // No split found: certify locality if we can.
  Subspace rad = algebra_radical(E.alg);
  std::size_t quot = d - rad.dim();
  if (quot == 1) return std::nullopt;
  // Commutative semisimple quotient that is a field is still local.
  bool commutative = true;
  for (std::size_t i = 0; i < d && commutative; ++i)
    for (std::size_t j = i + 1; j < d && commutative; ++j) {
      Vec ei(d, Rational(0)), ej(d, Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      Vec comm = E.alg.multiply(ei, ej);
      Vec ji = E.alg.multiply(ej, ei);
      for (std::size_t k = 0; k < d; ++k) comm[k] -= ji[k];
      if (!rad.contains(comm)) commutative = false;
    }
  if (commutative) {
    for (const auto& coords : pool) {
      QPoly mu = algebra_min_poly(E.alg, coords, &rad);
      if (static_cast<std::size_t>(qp_deg(mu)) != quot) continue;
      auto factors = qp_factor(mu);
      if (factors && factors->size() == 1) return std::nullopt;  // field: local
    }
  }
  *local_certified = false;  // indecomposable (division-ring quotient unverified)
  return std::nullopt;
}

}  // namespace detail

// Full Krull-Schmidt decomposition with split embeddings, recursing through
// Fitting decompositions of endomorphisms.
inline std::vector<Summand> decompose_full(const Rep& M) {
  std::vector<Summand> out;
  if (M.is_zero()) return out;
  std::vector<Summand> stack{{M, identity_map(M), identity_map(M), true}};
  while (!stack.empty()) {
    Summand s = std::move(stack.back());
    stack.pop_back();
    bool certified = true;
    auto split = detail::try_split(s.rep, &certified);
    if (!split) {
      s.local_certified = certified;
      out.push_back(std::move(s));
      continue;
    }
    for (auto* part : {&split->part0, &split->part1}) {
      Summand t;
      t.rep = part->rep;
      t.incl = compose(s.incl, part->incl);
      t.proj = compose(part->proj, s.proj);
      stack.push_back(std::move(t));
    }
  }
  return out;
}

// Isomorphism test for indecomposables: some pair (f, g) of hom basis
// elements has g o f invertible, because End(X) is local.
inline std::optional<RepMap> indec_isomorphism(const Rep& X, const Rep& Y) {
  if (X.dims != Y.dims) return std::nullopt;
  if (X.is_zero()) return identity_map(X);
  auto fs = hom_space(X, Y);
  auto gs = hom_space(Y, X);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (is_iso(compose(g, f))) return f;
  return std::nullopt;
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<RepMap> witness;
};

// General isomorphism test via decomposition matching; the witness is the
// block sum of summand isomorphisms.
inline IsoResult is_isomorphic(const Rep& M, const Rep& N) {
  if (M.alg.get() != N.alg.get()) throw UsageError("is_isomorphic: different algebras");
  if (M.dims != N.dims) return {false, std::nullopt};
  if (M.is_zero()) return {true, identity_map(M)};
  auto dm = decompose_full(M);
  auto dn = decompose_full(N);
  if (dm.size() != dn.size()) return {false, std::nullopt};
  std::vector<bool> used(dn.size(), false);
  RepMap w = zero_map(M, N);
  for (const auto& sm : dm) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.size(); ++j) {
      if (used[j]) continue;
      auto phi = indec_isomorphism(sm.rep, dn[j].rep);
      if (phi) {
        used[j] = true;
        matched = true;
        w = map_add(w, compose(dn[j].incl, compose(*phi, sm.proj)), 1);
        break;
      }
    }
    if (!matched) return {false, std::nullopt};
  }
  if (!is_iso(w)) throw ComputeError("internal error: assembled witness is not invertible");
  return {true, w};
}

// Indecomposable summands grouped by isomorphism class.
struct DecompClass {
  Rep rep;  // representative
  int multiplicity = 0;
  bool local_certified = true;
};

inline std::vector<DecompClass> decompose(const Rep& M) {
  std::vector<DecompClass> classes;
  for (const auto& s : decompose_full(M)) {
    bool found = false;
    for (auto& c : classes) {
      if (indec_isomorphism(s.rep, c.rep)) {
        c.multiplicity++;
        c.local_certified = c.local_certified && s.local_certified;
        found = true;
        break;
      }
    }
    if (!found) classes.push_back({s.rep, 1, s.local_certified});
  }
  return classes;
}

struct IndecResult {
  bool indecomposable = false;
  bool local_certified = false;
};

inline IndecResult is_indecomposable(const Rep& M) {
  if (M.is_zero()) return {false, true};
  bool cert = true;
  auto split = detail::try_split(M, &cert);
  if (split) return {false, true};
  return {true, cert};
}

}  // namespace hart
