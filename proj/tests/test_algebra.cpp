#include <catch2/catch_amalgamated.hpp>

#include "hart/algebra.hpp"

using namespace hart;

namespace {

// 0 -> 1 -> ... -> n with a_i a_{i+1} = 0; Example chain algebra.
Algebra chain_algebra(int n) {
  Quiver q;
  for (int i = 0; i <= n; ++i) q.add_vertex(i);
  for (int i = 0; i < n; ++i) q.add_arrow(i, i, i + 1, "a" + std::to_string(i));
  std::vector<PathComb> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({{Rational(1), {i, i + 1}}});
  return build_algebra(q, rels, 3);
}

}  // namespace

TEST_CASE("chain algebra Lambda_2 has dimension 5 with the expected basis") {
  Algebra A = chain_algebra(2);
  REQUIRE(A.dim() == 5);
  // e0, e1, e2, a0, a1 in degree-then-lex order.
  CHECK(A.basis_paths()[0].empty());
  CHECK(A.basis_paths()[3] == std::vector<int>{0});
  CHECK(A.basis_paths()[4] == std::vector<int>{1});
  CHECK(A.reduce_path({0, 1}).empty());
  // dim A = sum over (i,j) of dim e_i A e_j.
  std::size_t total = 0;
  for (std::size_t i = 0; i < A.vertex_count(); ++i)
    for (std::size_t j = 0; j < A.vertex_count(); ++j)
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (A.basis_src(k) == (int)i && A.basis_tgt(k) == (int)j) ++total;
  CHECK(total == A.dim());
}

TEST_CASE("one vertex, no arrows") {
  Quiver q;
  q.add_vertex(0);
  Algebra A = build_algebra(q, {}, 1);
  CHECK(A.dim() == 1);
}

TEST_CASE("linear A3 path algebra has dimension 6") {
  Algebra A = build_algebra(linear_quiver(3), {}, 3);
  CHECK(A.dim() == 6);
  CHECK(A.reduce_path({1, 2}).size() == 1);
}

TEST_CASE("commutative square picks the deg-lex smallest normal form") {
  Quiver q;
  for (int i = 0; i < 4; ++i) q.add_vertex(i);
  q.add_arrow(0, 0, 1);
  q.add_arrow(1, 1, 3);
  q.add_arrow(2, 0, 2);
  q.add_arrow(3, 2, 3);
  PathComb rel{{Rational(1), {0, 1}}, {Rational(-1), {2, 3}}};
  Algebra A = build_algebra(q, {rel}, 3);
  CHECK(A.dim() == 9);
  // [2,3] reduces to [0,1].
  SVec r = A.reduce_path({2, 3});
  REQUIRE(r.size() == 1);
  CHECK(A.basis_paths()[r[0].first] == std::vector<int>{0, 1});
  CHECK(r[0].second == 1);
}

TEST_CASE("opposite algebra is a dimension-preserving structural involution") {
  Algebra A = chain_algebra(2);
  Algebra op = opposite_algebra(A);
  CHECK(op.dim() == A.dim());
  CHECK(op.quiver().arrows()[0].src == 1);
  Algebra opop = opposite_algebra(op);
  CHECK(opop.quiver().same_shape(A.quiver()));
  CHECK(opop.basis_paths() == A.basis_paths());
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) CHECK(opop.mult(a, b) == A.mult(a, b));
}

TEST_CASE("dual numbers as one vertex plus loop") {
  Quiver q;
  q.add_vertex(0);
  q.add_arrow(0, 0, 0, "t");
  Algebra A = build_algebra(q, {{{Rational(1), {0, 0}}}}, 2);
  CHECK(A.dim() == 2);
  Algebra op = opposite_algebra(A);
  CHECK(op.dim() == 2);
  CHECK(op.basis_paths() == A.basis_paths());
}

TEST_CASE("nilpotency probe reports instability with a witness") {
  Quiver q;
  q.add_vertex(0);
  q.add_arrow(0, 0, 0, "t");
  PathComb cube{{Rational(1), {0, 0, 0}}};
  CHECK_THROWS_AS(build_algebra(q, {cube}, 2), ComputeError);
  Algebra A = build_algebra(q, {cube}, 3);
  CHECK(A.dim() == 3);
}

TEST_CASE("graded and generic constructors agree on homogeneous input") {
  Quiver q;
  for (int i = 0; i <= 2; ++i) q.add_vertex(i);
  q.add_arrow(0, 0, 1);
  q.add_arrow(1, 1, 2);
  std::vector<PathComb> rels{{{Rational(1), {0, 1}}}};
  auto g = detail::build_graded(q, rels, 4);
  auto n = detail::build_general(q, rels, 4);
  CHECK(g.basis_paths == n.basis_paths);
  CHECK(g.table == n.table);
}

TEST_CASE("preprojective relations of A2 give the 4-dimensional algebra") {
  // Doubled quiver 1 <-> 2 with the mesh relations a a* = 0, a* a = 0.
  Quiver q;
  q.add_vertex(1);
  q.add_vertex(2);
  q.add_arrow(1, 1, 2, "a");
  q.add_arrow(2, 2, 1, "a*");
  std::vector<PathComb> rels{{{Rational(1), {1, 2}}}, {{Rational(-1), {2, 1}}}};
  Algebra A = build_algebra(q, rels, 3);
  CHECK(A.dim() == 4);
  Algebra B = build_algebra(q, rels, 5);
  CHECK(B.dim() == 4);
}

TEST_CASE("relation validation") {
  Quiver q = linear_quiver(3);
  PathComb bad{{Rational(1), {2, 1}}};  // non-composable
  CHECK_THROWS_AS(validate_relation(q, bad), UsageError);
  PathComb tooshort{{Rational(1), {1}}};
  CHECK_THROWS_AS(validate_relation(q, tooshort), UsageError);
  PathComb mixed{{Rational(1), {1, 2}}, {Rational(1), {2}}};
  CHECK_THROWS_AS(validate_relation(q, mixed), UsageError);
}

TEST_CASE("determinism: identical inputs give identical bases and tables") {
  Algebra A = chain_algebra(3);
  Algebra B = chain_algebra(3);
  CHECK(A.basis_paths() == B.basis_paths());
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b) CHECK(A.mult(a, b) == B.mult(a, b));
}
