#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pstab/algebra.hpp"
#include "pstab/corpus.hpp"
#include "test_util.hpp"

using namespace pstab;
using namespace pstab::testutil;

TEST_CASE("closure of the identity tuple") {
  GroupPoint x(Group::GL, Kind::GroupTuple, {Matrix::identity(2, Field::Q)});
  auto a = algebra_closure(x);
  CHECK(a.dim == 1);
  CHECK(a.radical_dim == 0);
  CHECK(a.commutant_dim == 4);
  CHECK(!is_irreducible(a));
  CHECK(is_completely_reducible(a));
  CHECK(!is_isotropic(a, Group::GL));
}

TEST_CASE("quaternion pair generates the full matrix algebra") {
  GroupPoint x = example_quaternion_pair();
  auto a = algebra_closure(x);
  CHECK(a.dim == 4);
  CHECK(a.radical_dim == 0);
  CHECK(a.commutant_dim == 1);
  CHECK(is_irreducible(a));
  CHECK(is_isotropic(a, Group::GL));
  // oracle agreement
  CHECK(oracle_word_span_dim(x.mats(), 2, Field::QI) == 4);
}

TEST_CASE("shear tuple: radical and commutant") {
  GroupPoint x(Group::GL, Kind::LieTuple, {Matrix::ints({{3, 5}, {0, 3}})});
  auto a = algebra_closure(x);
  CHECK(a.dim == 2);
  CHECK(a.radical_dim == 1);
  CHECK(a.commutant_dim == 2);
  CHECK(!is_completely_reducible(a));
  // gram of {I, E12}-spanned algebra has rank 1
  CHECK(rref(a.gram).rank == 1);
  auto w = radical_invariant_subspace(a);
  REQUIRE(w);
  CHECK(w->dim() == 1);
  CHECK(w->contains_vector({Scalar::integer(1), Scalar::integer(0)}));
  for (const auto& g : x.mats()) CHECK(w->invariant_under(g));
}

TEST_CASE("single diagonal matrix stays diagonal") {
  GroupPoint x(Group::GL, Kind::GroupTuple, {Matrix::ints({{1, 0}, {0, 2}})});
  auto a = algebra_closure(x);
  CHECK(a.dim == 2);
  CHECK(!is_irreducible(a));
  CHECK(is_completely_reducible(a));
  CHECK(a.commutant_dim == 2);
  CHECK(!is_isotropic(a, Group::GL));
}

TEST_CASE("nilpotent single: radical image") {
  GroupPoint x(Group::GL, Kind::LieTuple, {Matrix::ints({{0, 1}, {0, 0}})});
  auto a = algebra_closure(x);
  auto w = radical_invariant_subspace(a);
  REQUIRE(w);
  CHECK(w->dim() == 1);
  CHECK(w->contains_vector({Scalar::integer(1), Scalar::integer(0)}));

  GroupPoint semisimple(Group::GL, Kind::LieTuple, {Matrix::ints({{1, 0}, {0, 2}})});
  CHECK(!radical_invariant_subspace(algebra_closure(semisimple)));
}

TEST_CASE("closure soundness: basis products reduce to zero") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 20; ++iter) {
    GroupPoint x = random_group_point(rng, 2 + iter % 2, 1 + iter % 3, iter);
    auto a = algebra_closure(x);
    SpanBuilder span(a.n * a.n, a.field);
    for (const auto& b : a.basis) span.add(b.vectorized());
    for (const auto& p : a.basis)
      for (const auto& q : a.basis) CHECK(span.contains((p * q).vectorized()));
    // oracle agreement on the dimension
    CHECK(a.dim == oracle_word_span_dim(x.mats(), a.n, a.field));
  }
}

TEST_CASE("burnside / trace form / commutant consistency") {
  std::mt19937_64 rng(67);
  size_t checked = 0;
  for (int iter = 0; iter < 120; ++iter) {
    size_t n = 2 + iter % 2;
    GroupPoint x = random_group_point(rng, n, 1 + iter % 3, iter);
    auto a = algebra_closure(x);
    bool lhs = is_irreducible(a);
    bool rhs = is_completely_reducible(a) && a.commutant_dim == 1;
    CHECK(lhs == rhs);
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("double commutant contains the algebra") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 15; ++iter) {
    GroupPoint x = random_group_point(rng, 2, 2, iter);
    auto a = algebra_closure(x);
    auto cc = commutant_of(a.commutant_basis, a.n, a.field);
    SpanBuilder span(a.n * a.n, a.field);
    for (const auto& m : cc) span.add(m.vectorized());
    for (const auto& b : a.basis) CHECK(span.contains(b.vectorized()));
  }
}

TEST_CASE("invariance under conjugation and field lift") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 15; ++iter) {
    GroupPoint x = random_group_point(rng, 2 + iter % 2, 1 + iter % 2, iter);
    auto a = algebra_closure(x);
    Matrix g = random_invertible(rng, x.n(), Field::Q);
    auto b = algebra_closure(x.conjugated_by(g));
    CHECK(a.dim == b.dim);
    CHECK(a.radical_dim == b.radical_dim);
    CHECK(a.commutant_dim == b.commutant_dim);
    auto c = algebra_closure(x.lifted());
    CHECK(a.dim == c.dim);
    CHECK(a.radical_dim == c.radical_dim);
    CHECK(a.commutant_dim == c.commutant_dim);
  }
}

TEST_CASE("adjoint matrices") {
  GroupPoint id2(Group::GL, Kind::GroupTuple, {Matrix::identity(2, Field::Q)});
  auto ad_id = ad_matrices(id2);
  CHECK(ad_id.n() == 4);
  CHECK(ad_id.mat(0).is_identity());

  GroupPoint d(Group::GL, Kind::GroupTuple, {Matrix::ints({{1, 0}, {0, 2}})});
  auto ad_d = ad_matrices(d);
  Matrix expected = Matrix::from_rows({
      {Scalar::integer(1), Scalar::integer(0), Scalar::integer(0), Scalar::integer(0)},
      {Scalar::integer(0), Scalar::rational(1, 2), Scalar::integer(0), Scalar::integer(0)},
      {Scalar::integer(0), Scalar::integer(0), Scalar::integer(2), Scalar::integer(0)},
      {Scalar::integer(0), Scalar::integer(0), Scalar::integer(0), Scalar::integer(1)},
  });
  CHECK(ad_d.mat(0) == expected);

  // the quaternion pair's adjoint images on sl_2 commute; the envelope is the
  // full diagonal algebra of the common eigenbasis, dimension 3
  auto ad_q = ad_matrices_traceless(example_quaternion_pair());
  CHECK(ad_q.n() == 3);
  CHECK(ad_q.mat(0) * ad_q.mat(1) == ad_q.mat(1) * ad_q.mat(0));
  auto env = algebra_closure(ad_q);
  CHECK(env.dim == 3);
  CHECK(!is_irreducible(env));
  CHECK(oracle_word_span_dim(ad_q.mats(), 3, Field::QI) == 3);

  CHECK_THROWS_AS(ad_matrices(GroupPoint(Group::GL, Kind::LieTuple, {Matrix::identity(2, Field::Q)})),
                  Error);
}

TEST_CASE("adjoint irreducibility implies isotropy") {
  std::mt19937_64 rng(79);
  size_t hits = 0;
  for (int iter = 0; iter < 60; ++iter) {
    size_t n = 2;
    std::vector<Matrix> mats;
    for (size_t i = 0; i < 2; ++i) mats.push_back(random_invertible(rng, n, Field::Q));
    GroupPoint x(Group::GL, Kind::GroupTuple, std::move(mats));
    auto ad = ad_matrices_traceless(x);
    if (is_irreducible(algebra_closure(ad))) {
      ++hits;
      CHECK(is_isotropic(algebra_closure(x), x.group()));
    }
  }
  CHECK(hits > 0);  // generic pairs are adjoint-irreducible
}
