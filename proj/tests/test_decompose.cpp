#include <catch2/catch_amalgamated.hpp>

#include "hart/decompose.hpp"

using namespace hart;

namespace {

AlgebraPtr lambda2() {
  Quiver q;
  for (int i = 0; i <= 2; ++i) q.add_vertex(i);
  q.add_arrow(0, 0, 1, "a0");
  q.add_arrow(1, 1, 2, "a1");
  return make_algebra(build_algebra(q, {{{Rational(1), {0, 1}}}}, 3));
}

AlgebraPtr ka3() { return make_algebra(build_algebra(linear_quiver(3), {}, 3)); }

}  // namespace

TEST_CASE("P0 + P0 decomposes as one class with multiplicity two") {
  auto A = lambda2();
  Rep M = direct_sum({projective(A, 0), projective(A, 0)}).sum;
  auto classes = decompose(M);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].multiplicity == 2);
  CHECK(classes[0].rep.total_dim() == 2);
  CHECK(classes[0].local_certified);
}

TEST_CASE("the regular module of Lambda_2 splits into its three projectives") {
  auto A = lambda2();
  auto classes = decompose(regular_rep(A));
  REQUIRE(classes.size() == 3);
  int matched = 0;
  for (int i = 0; i <= 2; ++i) {
    Rep P = projective(A, i);
    for (const auto& c : classes)
      if (c.multiplicity == 1 && indec_isomorphism(c.rep, P)) ++matched;
  }
  CHECK(matched == 3);
}

TEST_CASE("regular kA3 plus all simples merges S3 with P3") {
  auto A = ka3();
  std::vector<Rep> parts{regular_rep(A)};
  for (int i = 1; i <= 3; ++i) parts.push_back(simple(A, i));
  auto classes = decompose(direct_sum(parts).sum);
  // P1, P2, P3 = S3, S1, S2: five classes, with P3 = S3 of multiplicity 2.
  REQUIRE(classes.size() == 5);
  int mult2 = 0;
  for (const auto& c : classes)
    if (c.multiplicity == 2) {
      ++mult2;
      CHECK(c.rep.total_dim() == 1);
      CHECK(c.rep.dims[2] == 1);
    }
  CHECK(mult2 == 1);
}

TEST_CASE("decompose_full returns split embeddings") {
  auto A = lambda2();
  Rep M = direct_sum({projective(A, 0), simple(A, 1), injective(A, 2)}).sum;
  auto parts = decompose_full(M);
  REQUIRE(parts.size() == 3);
  std::size_t total = 0;
  for (const auto& s : parts) {
    total += s.rep.total_dim();
    CHECK(is_iso(compose(s.proj, s.incl)));
    CHECK(intertwines(s.incl));
    CHECK(intertwines(s.proj));
  }
  CHECK(total == M.total_dim());
}

TEST_CASE("is_isomorphic with witness") {
  auto A = lambda2();
  Rep M = direct_sum({projective(A, 0), simple(A, 2)}).sum;
  Rep N = direct_sum({simple(A, 2), projective(A, 0)}).sum;
  auto r = is_isomorphic(M, N);
  REQUIRE(r.isomorphic);
  REQUIRE(r.witness.has_value());
  CHECK(is_iso(*r.witness));
  CHECK(intertwines(*r.witness));

  CHECK(!is_isomorphic(simple(A, 0), simple(A, 1)).isomorphic);
  CHECK(is_isomorphic(M, M).isomorphic);
  // P2 = S2 over Lambda_2: both one-dimensional at vertex 2.
  CHECK(is_isomorphic(projective(A, 2), simple(A, 2)).isomorphic);
}

TEST_CASE("indecomposability reports") {
  auto A = lambda2();
  CHECK(is_indecomposable(projective(A, 0)).indecomposable);
  CHECK(is_indecomposable(projective(A, 0)).local_certified);
  CHECK(!is_indecomposable(regular_rep(A)).indecomposable);
}

TEST_CASE("Krull-Schmidt uniqueness across shuffled sums") {
  auto A = ka3();
  Rep M = direct_sum({projective(A, 1), simple(A, 2), projective(A, 2)}).sum;
  Rep N = direct_sum({simple(A, 2), projective(A, 2), projective(A, 1)}).sum;
  auto cm = decompose(M);
  auto cn = decompose(N);
  REQUIRE(cm.size() == cn.size());
  for (const auto& c : cm) {
    bool found = false;
    for (const auto& d : cn)
      if (c.multiplicity == d.multiplicity && indec_isomorphism(c.rep, d.rep)) found = true;
    CHECK(found);
  }
}
