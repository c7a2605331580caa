#include <catch2/catch_amalgamated.hpp>

#include "hart/homology.hpp"

using namespace hart;

namespace {

AlgebraPtr chain(int n) {
  Quiver q;
  for (int i = 0; i <= n; ++i) q.add_vertex(i);
  for (int i = 0; i < n; ++i) q.add_arrow(i, i, i + 1, "a" + std::to_string(i));
  std::vector<PathComb> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({{Rational(1), {i, i + 1}}});
  return make_algebra(build_algebra(q, rels, 3));
}

AlgebraPtr ka2() { return chain(1); }
AlgebraPtr lambda2() { return chain(2); }

AlgebraPtr dual_numbers() {
  Quiver q;
  q.add_vertex(0);
  q.add_arrow(0, 0, 0, "t");
  return make_algebra(build_algebra(q, {{{Rational(1), {0, 0}}}}, 2));
}

}  // namespace

TEST_CASE("projective covers") {
  auto A = lambda2();
  for (int i = 0; i <= 2; ++i) {
    auto c = projective_cover(simple(A, i));
    CHECK(is_isomorphic(c.P, projective(A, i)).isomorphic);
    CHECK(is_epi(c.onto));
    auto cp = projective_cover(projective(A, i));
    CHECK(is_iso(cp.onto));
  }
  // rad P_0 = S_1 over Lambda_2; its cover is P_1 with kernel S_2.
  auto r = radical(projective(A, 0)).first;
  auto c = projective_cover(r);
  CHECK(is_isomorphic(c.P, projective(A, 1)).isomorphic);
  CHECK(is_isomorphic(c.K, simple(A, 2)).isomorphic);
  // Minimality: the kernel sits inside the radical of the cover.
  Rep radP = radical(c.P).first;
  CHECK(c.K.total_dim() <= radP.total_dim());
}

TEST_CASE("syzygies over Lambda_2") {
  auto A = lambda2();
  CHECK(syzygy(projective(A, 0)).is_zero());
  CHECK(is_isomorphic(syzygy(simple(A, 0)), simple(A, 1)).isomorphic);
  CHECK(is_isomorphic(syzygy(simple(A, 0), 2), simple(A, 2)).isomorphic);
  CHECK(syzygy(simple(A, 0), 3).is_zero());
}

TEST_CASE("pd, injective dim and global dimension") {
  auto A3 = make_algebra(build_algebra(linear_quiver(3), {}, 3));
  CHECK(gl_dim(A3).eq(1));
  auto L2 = lambda2();
  CHECK(gl_dim(L2).eq(2));
  CHECK(pd(projective(L2, 1)).eq(0));
  CHECK(pd(simple(L2, 0)).eq(2));
  auto D = dual_numbers();
  CHECK(pd(simple(D, 0), 8).at_least);
  CHECK(gl_dim(D, 8).at_least);
}

TEST_CASE("Ext dimensions") {
  auto A = lambda2();
  // Ext^0 = Hom.
  CHECK(ext_dim(simple(A, 0), simple(A, 0), 0) == 1);
  CHECK(ext_dim(projective(A, 0), simple(A, 1), 1) == 0);
  CHECK(ext_dim(simple(A, 0), simple(A, 1), 1) == 1);
  // Independent route: count non-split extension cocycles directly.
  CHECK(ext1_basis(simple(A, 0), simple(A, 1)).cocycles.size() == 1);
  CHECK(ext_dim(simple(A, 0), simple(A, 2), 2) == 1);
  // Dimension shift: Ext^2(X, -) = Ext^1(Omega X, -).
  CHECK(ext1_basis(syzygy(simple(A, 0)), simple(A, 2)).cocycles.size() == 1);
}

TEST_CASE("transpose and tau basics") {
  auto A = lambda2();
  CHECK(transpose(projective(A, 0)).is_zero());
  CHECK(tau(projective(A, 1)).is_zero());
  // Tr Tr M = M up to projective summands.
  Rep S0 = simple(A, 0);
  Rep TrS0 = transpose(S0);
  Rep back = strip_projective_summands(transpose(TrS0));
  CHECK(is_isomorphic(back, S0).isomorphic);
}

TEST_CASE("tau over kA2: the unique almost split sequence") {
  auto A = ka2();
  // Indecomposables: P0, P1 = S1, S0; tau(S0) = S1.
  Rep t = tau(simple(A, 0));
  CHECK(is_isomorphic(t, simple(A, 1)).isomorphic);
  Rep ti = tau_inv(simple(A, 1));
  CHECK(is_isomorphic(ti, simple(A, 0)).isomorphic);
  CHECK(tau_inv(injective(A, 1)).is_zero());
}

TEST_CASE("AR duality over kA2 and Lambda_2") {
  for (auto A : {ka2(), lambda2()}) {
    std::vector<Rep> objs;
    for (const auto& v : A->quiver().vertices()) {
      objs.push_back(simple(A, v.id));
      objs.push_back(projective(A, v.id));
      objs.push_back(injective(A, v.id));
    }
    for (const auto& X : objs)
      for (const auto& Y : objs) {
        std::size_t e = ext_dim(X, Y, 1);
        CHECK(stable_hom_dim(tau_inv(Y), X) == e);
        CHECK(costable_hom_dim(Y, tau(X)) == e);
      }
  }
}

TEST_CASE("stable hom basics") {
  auto A = lambda2();
  CHECK(stable_hom_dim(projective(A, 0), simple(A, 0)) == 0);
  // Identity survives for indecomposable non-projectives.
  CHECK(stable_hom_dim(simple(A, 0), simple(A, 0)) >= 1);
}

TEST_CASE("dominant dimension") {
  auto L2 = lambda2();
  DimBound d = dom_dim(L2, 8);
  CHECK(!d.at_least);
  CHECK(d.value >= 2);
  // Semisimple: reported as ">= cap".
  Quiver q;
  q.add_vertex(0);
  auto K = make_algebra(build_algebra(q, {}, 1));
  CHECK(dom_dim(K, 8).at_least);
}

TEST_CASE("mn-condition and Gorenstein condition agree on Lambda_2") {
  auto L2 = lambda2();
  CHECK(mn_condition(L2, 2, 2, true));
  auto rep = gorenstein_condition(L2, true);
  CHECK(rep.holds);
  CHECK(rep.n == 2);
  // Semisimple: (m, n) holds for all m, n.
  Quiver q;
  q.add_vertex(0);
  q.add_vertex(1);
  auto K2 = make_algebra(build_algebra(q, {}, 1));
  CHECK(mn_condition(K2, 1, 1, true));
  CHECK(mn_condition(K2, 3, 5, true));
}

TEST_CASE("tau_n at n = 1 is tau") {
  auto A = lambda2();
  Rep t1 = tau_n(simple(A, 0), 1);
  CHECK(is_isomorphic(t1, tau(simple(A, 0))).isomorphic);
}

TEST_CASE("extension realization matches Ext^1") {
  auto A = ka2();
  Rep X = simple(A, 0), Z = simple(A, 1);
  auto eb = ext1_basis(X, Z);
  REQUIRE(eb.cocycles.size() == 1);
  CHECK(eb.cocycles.size() == ext_dim(X, Z, 1));
  ExactSeq seq = extension_from_cocycle(X, Z, eb, eb.cocycles[0]);
  CHECK(seq.is_exact());
  CHECK(seq.maps[0].source.total_dim() == 1);
  CHECK(seq.maps[1].target.total_dim() == 1);
  // The middle is P_0 (the sequence does not split).
  CHECK(is_isomorphic(seq.maps[0].target, projective(A, 0)).isomorphic);
}

TEST_CASE("star module of a projective is the opposite projective") {
  auto A = lambda2();
  auto Aop = opposite_of(A);
  for (int i = 0; i <= 2; ++i) {
    Rep s = star_module(projective(A, i));
    CHECK(is_isomorphic(s, projective(Aop, i)).isomorphic);
  }
}
