#include <catch2/catch_amalgamated.hpp>

#include "hart/rep.hpp"

using namespace hart;

namespace {

AlgebraPtr lambda2() {
  Quiver q;
  for (int i = 0; i <= 2; ++i) q.add_vertex(i);
  q.add_arrow(0, 0, 1, "a0");
  q.add_arrow(1, 1, 2, "a1");
  return make_algebra(build_algebra(q, {{{Rational(1), {0, 1}}}}, 3));
}

}  // namespace

TEST_CASE("projective and injective dimensions over Lambda_2") {
  auto A = lambda2();
  CHECK(projective(A, 0).total_dim() == 2);
  CHECK(projective(A, 1).total_dim() == 2);
  CHECK(projective(A, 2).total_dim() == 1);
  CHECK(injective(A, 0).total_dim() == 1);
  CHECK(injective(A, 1).total_dim() == 2);
  CHECK(injective(A, 2).total_dim() == 2);
  for (int i = 0; i <= 2; ++i) CHECK(simple(A, i).total_dim() == 1);
  CHECK(regular_rep(A).total_dim() == A->dim());
  validate_rep(projective(A, 0));
  validate_rep(injective(A, 2));
}

TEST_CASE("hom spaces: simples, tops, and projective covers") {
  auto A = lambda2();
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      CHECK(hom_dim(simple(A, i), simple(A, j)) == (i == j ? 1 : 0));
  CHECK(hom_dim(projective(A, 0), simple(A, 0)) == 1);
  CHECK(hom_dim(projective(A, 0), simple(A, 1)) == 0);
  // dim Hom(P_i, M) = dim M at vertex i.
  std::vector<Rep> batch{projective(A, 0), injective(A, 1), simple(A, 2),
                         direct_sum({projective(A, 1), injective(A, 2)}).sum};
  for (const auto& M : batch)
    for (int i = 0; i <= 2; ++i) CHECK(hom_dim(projective(A, i), M) == M.dims[i]);
}

TEST_CASE("intertwining and composition") {
  auto A = lambda2();
  Rep P0 = projective(A, 0), S0 = simple(A, 0);
  auto fs = hom_space(P0, S0);
  REQUIRE(fs.size() == 1);
  CHECK(intertwines(fs[0]));
  CHECK(is_epi(fs[0]));
  auto im = image(fs[0]);
  CHECK(im.rep.total_dim() == 1);
  CHECK(im.rep.dims[0] == 1);
}

TEST_CASE("kernel, cokernel, image shapes") {
  auto A = lambda2();
  Rep P0 = projective(A, 0);
  CHECK(kernel(identity_map(P0)).rep.is_zero());
  Rep Z = zero_rep(A);
  CHECK(cokernel(zero_map(Z, P0)).rep.total_dim() == P0.total_dim());
  auto f = hom_space(P0, simple(A, 0))[0];
  CHECK(kernel(f).rep.total_dim() + map_rank(f) == P0.total_dim());
}

TEST_CASE("radical, socle, top") {
  auto A = lambda2();
  for (int i = 0; i <= 2; ++i) {
    CHECK(radical(simple(A, i)).first.is_zero());
    CHECK(socle(simple(A, i)).first.total_dim() == 1);
    Rep t = top(projective(A, i)).first;
    CHECK(t.total_dim() == 1);
    CHECK(t.dims[i] == 1);
  }
  Rep socP0 = socle(projective(A, 0)).first;
  CHECK(socP0.total_dim() == 1);
  CHECK(socP0.dims[1] == 1);  // soc P_0 = S_1
}

TEST_CASE("duality is an involution and swaps projectives with injectives") {
  auto A = lambda2();
  Rep P1 = projective(A, 1);
  Rep D = dualize(P1);
  CHECK(D.alg.get() == opposite_of(A).get());
  Rep DD = dualize(D);
  CHECK(DD.alg.get() == A.get());
  CHECK(DD.dims == P1.dims);
  for (const auto& a : A->quiver().arrows()) CHECK(DD.act(a.id) == P1.act(a.id));
  // D(P_i over A) has the dimension vector of an injective over A^op.
  auto Aop = opposite_of(A);
  Rep Iop = injective(Aop, 1);
  CHECK(D.dims == Iop.dims);
  // D(top M) has the total dimension of soc(DM).
  Rep M = projective(A, 0);
  CHECK(top(M).first.total_dim() == socle(dualize(M)).first.total_dim());
}

TEST_CASE("short exact sequence certification") {
  auto A = lambda2();
  Rep P0 = projective(A, 0);
  auto soc = socle(P0);
  auto t = top(P0);
  ExactSeq seq{{soc.second, t.second}};
  CHECK(seq.is_complex());
  CHECK(seq.is_exact());
}

TEST_CASE("rank-nullity per representation map") {
  auto A = lambda2();
  Rep P0 = projective(A, 0), I1 = injective(A, 1);
  for (const auto& f : hom_space(P0, I1)) {
    CHECK(map_rank(f) + kernel(f).rep.total_dim() == P0.total_dim());
  }
}
