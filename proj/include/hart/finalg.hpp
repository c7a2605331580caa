#pragma once

#include <vector>

#include "hart/algebra.hpp"
#include "hart/qpoly.hpp"

namespace hart {

// An abstract associative unital algebra by structure constants, used for
// endomorphism rings and quotient algebras.
struct FiniteAlgebra {
  std::size_t dim = 0;
  std::vector<SVec> table;  // table[i*dim+j] = coords of b_i * b_j
  Vec unit;

  const SVec& mult(std::size_t i, std::size_t j) const { return table[i * dim + j]; }

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec r(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        Rational c = x[i] * y[j];
        for (const auto& [k, v] : mult(i, j)) r[k] += c * v;
      }
    }
    return r;
  }

  Mat left_mult(const Vec& x) const {  // y -> x*y in coordinates
    Mat L(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (const auto& [k, v] : mult(i, j)) L(k, j) += x[i] * v;
      }
    }
    return L;
  }
};

// Jacobson radical via the trace form of the regular representation
// (Dickson; valid in characteristic zero): rad = { x : tr(L_x L_y) = 0 for
// all y }.
inline Subspace algebra_radical(const FiniteAlgebra& E) {
  std::vector<Mat> L(E.dim);
  for (std::size_t i = 0; i < E.dim; ++i) {
    Vec e(E.dim, Rational(0));
    e[i] = 1;
    L[i] = E.left_mult(e);
  }
  Mat gram(E.dim, E.dim);
  for (std::size_t i = 0; i < E.dim; ++i)
    for (std::size_t j = i; j < E.dim; ++j) {
      Rational t(0);
      for (std::size_t r = 0; r < E.dim; ++r)
        for (std::size_t k = 0; k < E.dim; ++k) t += L[i](r, k) * L[j](k, r);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return kernel_basis(gram);
}

// Minimal polynomial of x in E, optionally modulo a subspace W (two-sided
// ideal): the monic mu of least degree with mu(x) in W.
inline QPoly algebra_min_poly(const FiniteAlgebra& E, const Vec& x,
                              const Subspace* modulo = nullptr) {
  Mat rows(0, E.dim);
  if (modulo) rows = modulo->basis();
  std::vector<Vec> powers;
  Vec p = E.unit;
  while (true) {
    // Is p dependent on W + previous powers?
    auto sol = solve(rows.transpose(), p);
    if (sol) {
      QPoly mu;
      std::size_t w = modulo ? modulo->dim() : 0;
      for (std::size_t k = 0; k < powers.size(); ++k) mu.push_back(-(*sol)[w + k]);
      mu.push_back(Rational(1));
      return mu;
    }
    powers.push_back(p);
    Mat nr(rows.rows() + 1, E.dim);
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < E.dim; ++j) nr(i, j) = rows(i, j);
    for (std::size_t j = 0; j < E.dim; ++j) nr(rows.rows(), j) = p[j];
    rows = std::move(nr);
    p = E.multiply(p, x);
    if (powers.size() > E.dim + 1) throw ComputeError("minimal polynomial did not terminate");
  }
}

}  // namespace hart
