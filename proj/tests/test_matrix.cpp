#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "hart/matrix.hpp"

using namespace hart;

namespace {

Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-4, 4);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = num(rng);
  return m;
}

}  // namespace

TEST_CASE("rref on identity, proportional rows and permutation") {
  Mat id = Mat::identity(2);
  auto r1 = rref(id);
  CHECK(r1.rank == 2);
  CHECK(r1.m == id);

  Mat prop = Mat::from_rows({{1, 2}, {2, 4}});
  auto r2 = rref(prop);
  CHECK(r2.rank == 1);
  CHECK(r2.m == Mat::from_rows({{1, 2}, {0, 0}}));

  Mat perm = Mat::from_rows({{0, 1}, {1, 0}});
  auto r3 = rref(perm);
  CHECK(r3.rank == 2);
  CHECK(r3.m == id);
}

TEST_CASE("kernel basis basics") {
  CHECK(kernel_basis(Mat(3, 3)).dim() == 3);
  CHECK(kernel_basis(Mat::identity(4)).dim() == 0);

  auto k = kernel_basis(Mat::from_rows({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vec{1, -1}));
}

TEST_CASE("solve") {
  Mat id = Mat::identity(3);
  Vec b{1, Rational(2, 3), -5};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto y = solve(Mat::from_rows({{1, 1}}), Vec{2});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == 2);

  CHECK(!solve(Mat(1, 1), Vec{1}).has_value());
  CHECK_THROWS_AS(solve(Mat(2, 2), Vec{1}), UsageError);
}

TEST_CASE("subspace sum and intersection") {
  Subspace zero(2);
  Subspace e1(2, Mat::from_rows({{1, 0}}));
  Subspace e2(2, Mat::from_rows({{0, 1}}));
  CHECK(subspace_sum(e1, zero) == e1);
  CHECK(subspace_intersection(e1, Subspace::full(2)) == e1);
  CHECK(subspace_intersection(e1, e2).dim() == 0);
  CHECK_THROWS_AS(subspace_sum(e1, Subspace(3)), UsageError);
}

TEST_CASE("rank-nullity, rref idempotence, modular dimension law") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t r = 1 + iter % 5, c = 1 + (iter * 7) % 6;
    Mat m = random_matrix(rng, r, c);
    auto rr = rref(m);
    CHECK(rr.rank + kernel_basis(m).dim() == c);
    CHECK(rref(rr.m).m == rr.m);

    Mat a = random_matrix(rng, 1 + iter % 4, 5);
    Mat b = random_matrix(rng, 1 + (iter + 2) % 4, 5);
    Subspace A(5, a), B(5, b);
    auto S = subspace_sum(A, B);
    auto I = subspace_intersection(A, B);
    CHECK(S.dim() + I.dim() == A.dim() + B.dim());
    CHECK(S.contains(A));
    CHECK(A.contains(I));
  }
}

TEST_CASE("equal row spaces have equal rref bases") {
  std::mt19937 rng(99);
  Mat a = random_matrix(rng, 3, 5);
  // Shuffle rows and take invertible combinations; the canonical basis must agree.
  Mat b = Mat::from_rows({a.row(2), a.row(0), a.row(1)});
  Mat c(3, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    c(0, j) = a(0, j) + a(1, j);
    c(1, j) = a(1, j) - a(2, j) * Rational(3, 2);
    c(2, j) = a(2, j);
  }
  CHECK(Subspace(5, a) == Subspace(5, b));
  CHECK(Subspace(5, a) == Subspace(5, c));
}
