#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pstab/matrix.hpp"
#include "test_util.hpp"

using namespace pstab;
using namespace pstab::testutil;

TEST_CASE("rref basics") {
  auto e = rref(Matrix::identity(2, Field::Q));
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<size_t>{0, 1});

  auto dep = rref(Matrix::ints({{1, 2}, {2, 4}}));
  CHECK(dep.rank == 1);
  CHECK(dep.basis == Matrix::ints({{1, 2}}));

  Matrix frac = Matrix::from_rows({{Scalar::rational(1, 2), Scalar::rational(1, 3)},
                                   {Scalar::integer(0), Scalar::rational(1, 7)}});
  CHECK(rref(frac).rank == 2);
}

TEST_CASE("rref is canonical on equal spans") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix a = random_matrix(rng, 3, Field::Q);
    // rows of g*a span the same row space for invertible g acting by row ops
    Matrix g = random_invertible(rng, 3, Field::Q);
    Matrix b = g * a;
    CHECK(rref(a).basis == rref(b).basis);
  }
}

TEST_CASE("rank of products") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    Matrix a = random_matrix(rng, 3, Field::Q);
    Matrix b = random_matrix(rng, 3, Field::Q);
    size_t ra = rref(a).rank, rb = rref(b).rank, rab = rref(a * b).rank;
    CHECK(rab <= std::min(ra, rb));
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Matrix::identity(3, Field::Q)).is_identity());
  Matrix d = Matrix::ints({{2, 0}, {0, 3}});
  CHECK(inverse(d) == Matrix::from_rows({{Scalar::rational(1, 2), Scalar::integer(0)},
                                         {Scalar::integer(0), Scalar::rational(1, 3)}}));
  // [[0,1],[-1,0]] over Q(i)
  Matrix j = Matrix::ints({{0, 1}, {-1, 0}}, Field::QI);
  CHECK(inverse(j) == Matrix::ints({{0, -1}, {1, 0}}, Field::QI));

  Matrix sing = Matrix::ints({{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(sing), Error);

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    Matrix m = random_invertible(rng, 3, Field::Q);
    CHECK(inverse(inverse(m)) == m);
    CHECK((m * inverse(m)).is_identity());
  }
}

TEST_CASE("kernel") {
  Matrix zero3(3, 3, Field::Q);
  CHECK(kernel_basis(zero3).rows() == 3);
  CHECK(kernel_basis(Matrix::identity(3, Field::Q)).rows() == 0);

  // v -> A v - v A for A = diag(1,2) on 2x2 matrices: kernel = diagonals
  Matrix a = Matrix::ints({{1, 0}, {0, 2}});
  std::vector<std::vector<Scalar>> rows;
  for (size_t p = 0; p < 2; ++p)
    for (size_t q = 0; q < 2; ++q) {
      std::vector<Scalar> row(4, Scalar::zero(Field::Q));
      for (size_t c = 0; c < 2; ++c) {
        row[c * 2 + q] += a.at(p, c);
        row[p * 2 + c] -= a.at(c, q);
      }
      rows.push_back(std::move(row));
    }
  Matrix commutation = Matrix::from_rows(rows);
  CHECK(kernel_basis(commutation).rows() == 2);

  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 40; ++iter) {
    Matrix m = random_matrix(rng, 3, Field::Q);
    CHECK(kernel_basis(m).rows() + rref(m).rank == 3);
  }
}

TEST_CASE("determinant and characteristic polynomial") {
  Matrix m = Matrix::ints({{1, 2}, {3, 4}});
  CHECK(det(m) == Scalar::integer(-2));
  auto cp = charpoly(m);  // t^2 - 5t - 2
  CHECK(cp[2] == Scalar::integer(1));
  CHECK(cp[1] == Scalar::integer(-5));
  CHECK(cp[0] == Scalar::integer(-2));

  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 30; ++iter) {
    Matrix r = random_matrix(rng, 3, Field::Q);
    auto c = charpoly(r);
    // constant term of det(tI - A) is (-1)^n det(A)
    CHECK(c[0] == -det(r));
    CHECK(c[2] == -r.trace());
  }
}

TEST_CASE("exp of nilpotent matrices") {
  Matrix n = Matrix::ints({{0, 1}, {0, 0}});
  CHECK(exp_nilpotent(n) == Matrix::ints({{1, 1}, {0, 1}}));
  Matrix n3 = Matrix::ints({{0, 2, 0}, {0, 0, 3}, {0, 0, 0}});
  Matrix e = exp_nilpotent(n3);
  CHECK(e.at(0, 2) == Scalar::integer(3));  // 2*3/2
  CHECK_THROWS_AS(exp_nilpotent(Matrix::identity(2, Field::Q)), Error);
}

TEST_CASE("mixed fields are rejected") {
  Matrix q = Matrix::identity(2, Field::Q);
  Matrix qi = Matrix::identity(2, Field::QI);
  CHECK_THROWS_AS(q * qi, Error);
}
