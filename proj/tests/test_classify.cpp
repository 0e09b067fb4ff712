#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pstab/corpus.hpp"
#include "test_util.hpp"

using namespace pstab;
using namespace pstab::testutil;

TEST_CASE("worked example verdicts") {
  auto diag = classify(example_sl2_diag());
  CHECK(diag.polystable);
  CHECK(!diag.stable);
  CHECK(!diag.equicentral);
  CHECK(diag.dims.commutant_dim == 2);
  CHECK(diag.dims.stabilizer_dim == 1);

  auto scalar = classify(example_sl2_scalar());
  CHECK(scalar.polystable);
  CHECK(!scalar.stable);
  CHECK(scalar.dims.stabilizer_dim == 3);

  auto shear = classify(example_sl2_shear());
  CHECK(!shear.polystable);
  REQUIRE(shear.witness);
  CHECK(shear.witness->cochar.weights() == std::vector<long long>{1, -1});
  CHECK(shear.witness->limit.mat(0).is_identity());
  CHECK(!shear.witness->limit_in_orbit);

  auto quat = classify(example_quaternion_pair());
  CHECK(quat.polystable);
  CHECK(quat.stable);
  CHECK(quat.equicentral);
  CHECK(quat.dims.stabilizer_dim == 1);  // scalars in GL_2
}

TEST_CASE("n = 1 degenerate case") {
  GroupPoint x(Group::GL, Kind::GroupTuple, {Matrix::ints({{5}})});
  auto r = classify(x);
  CHECK(r.polystable);
  CHECK(r.stable);
  CHECK(r.irreducible);
  bool note_found = false;
  for (const auto& nmsg : r.notes) note_found = note_found || nmsg.find("n = 1") != std::string::npos;
  CHECK(note_found);
}

TEST_CASE("rotation over Q: stable verdict without a rational witness") {
  GroupPoint x(Group::GL, Kind::GroupTuple, {Matrix::ints({{0, 1}, {-1, 0}})});
  auto r = classify(x);
  CHECK(r.polystable);
  CHECK(!r.stable);  // commutant has dimension 2
  bool note_found = false;
  for (const auto& nmsg : r.notes)
    note_found = note_found || nmsg.find("witness unavailable") != std::string::npos;
  CHECK(note_found);
  // over Q(i) the invariant line exists and the verdict is unchanged
  auto lifted = classify(x.lifted());
  CHECK(lifted.polystable == r.polystable);
  CHECK(lifted.stable == r.stable);
  CHECK(lifted.dims.algebra_dim == r.dims.algebra_dim);
}

TEST_CASE("destabilization witnesses") {
  auto nil = destabilize(GroupPoint(Group::SL, Kind::LieTuple, {Matrix::ints({{0, 1}, {0, 0}})}));
  REQUIRE(nil);
  CHECK(nil->cochar.weights() == std::vector<long long>{1, -1});
  CHECK(nil->limit.mat(0).is_zero());
  CHECK(!nil->limit_in_orbit);

  auto shear = destabilize(example_sl2_shear());
  REQUIRE(shear);
  CHECK(shear->limit.mat(0).is_identity());
  CHECK(classify(shear->limit).polystable);

  CHECK(!destabilize(example_sl2_diag()));

  // 3x3 with a two-step radical filtration: one witness suffices
  GroupPoint chain(Group::GL, Kind::LieTuple,
                   {Matrix::ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})});
  auto w = destabilize(chain);
  REQUIRE(w);
  CHECK(w->flag.steps().size() == 2);
  CHECK(classify(w->limit).polystable);
  CHECK(w->limit.mat(0).is_zero());
}

TEST_CASE("orbit membership") {
  GroupPoint x(Group::GL, Kind::LieTuple, {Matrix::ints({{1, 0}, {0, 2}})});
  CHECK(orbit_member(x, x).in_orbit);

  GroupPoint y(Group::GL, Kind::LieTuple, {Matrix::ints({{2, 0}, {0, 1}})});
  auto swapd = orbit_member(x, y);
  CHECK(swapd.in_orbit);
  REQUIRE(swapd.witness);
  CHECK(*swapd.witness * x.mat(0) == y.mat(0) * *swapd.witness);

  GroupPoint shear(Group::GL, Kind::LieTuple, {Matrix::ints({{1, 1}, {0, 1}})});
  GroupPoint id(Group::GL, Kind::LieTuple, {Matrix::identity(2, Field::Q)});
  CHECK(!orbit_member(shear, id).in_orbit);

  // different tuple lengths are shape errors
  CHECK_THROWS_AS(orbit_member(x, x.concat(x)), Error);
}

TEST_CASE("orbit membership under SL records the scaling") {
  GroupPoint x(Group::SL, Kind::LieTuple, {Matrix::ints({{1, 0}, {0, 2}})});
  GroupPoint y(Group::SL, Kind::LieTuple, {Matrix::ints({{2, 0}, {0, 1}})});
  auto d = orbit_member(x, y);
  CHECK(d.in_orbit);
  CHECK((d.sl_scaling == "rational" || d.sl_scaling == "irrational"));
  if (d.sl_scaling == "rational") {
    REQUIRE(d.witness);
    CHECK(det(*d.witness).is_one());
  }
}

TEST_CASE("hilbert-mumford cross-check on the worked examples") {
  for (const GroupPoint& x : {example_sl2_diag(), example_sl2_scalar(), example_sl2_shear(),
                              example_quaternion_pair()}) {
    auto rep = hm_crosscheck(x, 2);
    CHECK(rep.consistent);
    CHECK(rep.violations.empty());
  }
  // diag(1,2): the diagonal torus cochars keep the point and fix it
  auto rep = hm_crosscheck(example_sl2_diag(), 2);
  bool saw_noncentral = false;
  for (const auto& l : rep.lambdas) {
    if (!l.central) saw_noncentral = true;
    CHECK(l.limit_in_orbit);
    CHECK(l.opposite_fixes_limit);
  }
  CHECK(saw_noncentral);
}

TEST_CASE("h-approx dimensions for the worked examples") {
  auto diag = h_approx(example_sl2_diag(), 1);
  CHECK(diag.upper_dim == 1);

  auto shear = h_approx(example_sl2_shear(), 1);
  CHECK(shear.upper_dim == 2);

  auto quat = h_approx(example_quaternion_pair(), 2);
  CHECK(quat.upper_dim == 4);
  CHECK(quat.flag_subspaces.empty());
}

TEST_CASE("stable points have central stabilizer dimension") {
  std::mt19937_64 rng(83);
  size_t stable_seen = 0;
  for (int iter = 0; iter < 40; ++iter) {
    GroupPoint x = random_group_point(rng, 2, 2, iter);
    auto r = classify(x);
    if (r.stable) {
      ++stable_seen;
      size_t dim_center = x.group() == Group::GL ? 1 : 0;
      CHECK(r.dims.stabilizer_dim == dim_center);
    }
    CHECK(r.stable == (r.polystable && r.dims.commutant_dim == 1));
    if (r.equicentral) CHECK(r.stable);
    if (r.stable) CHECK(r.polystable);
  }
  CHECK(stable_seen > 0);
}

TEST_CASE("witness limits preserve trace words") {
  std::mt19937_64 rng(89);
  size_t witnessed = 0;
  for (int iter = 0; iter < 40 && witnessed < 10; ++iter) {
    GroupPoint x = random_group_point(rng, 2 + iter % 2, 1 + iter % 2, iter);
    auto r = classify(x);
    if (!r.witness) continue;
    ++witnessed;
    const GroupPoint& y = r.witness->limit;
    size_t cnt = x.count();
    // words up to length 3 over the generators
    std::vector<std::vector<size_t>> words;
    for (size_t a = 0; a < cnt; ++a) {
      words.push_back({a});
      for (size_t b = 0; b < cnt; ++b) {
        words.push_back({a, b});
        for (size_t c = 0; c < cnt; ++c) words.push_back({a, b, c});
      }
    }
    for (const auto& word : words) {
      Matrix wx = Matrix::identity(x.n(), x.field());
      Matrix wy = Matrix::identity(x.n(), x.field());
      for (size_t idx : word) {
        wx = wx * x.mat(idx);
        wy = wy * y.mat(idx);
      }
      CHECK(wx.trace() == wy.trace());
    }
  }
  CHECK(witnessed > 0);
}

TEST_CASE("report is conjugation invariant") {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 12; ++iter) {
    GroupPoint x = random_group_point(rng, 2, 2, iter);
    auto r = classify(x);
    Matrix g = random_invertible(rng, 2, Field::Q);
    auto rc = classify(x.conjugated_by(g));
    CHECK(r.polystable == rc.polystable);
    CHECK(r.stable == rc.stable);
    CHECK(r.equicentral == rc.equicentral);
    CHECK(r.dims.algebra_dim == rc.dims.algebra_dim);
    CHECK(r.dims.radical_dim == rc.dims.radical_dim);
    CHECK(r.dims.commutant_dim == rc.dims.commutant_dim);
    CHECK(r.dims.stabilizer_dim == rc.dims.stabilizer_dim);
    CHECK(r.witness.has_value() == rc.witness.has_value());
  }
}

TEST_CASE("algebra dimension grows under concatenation") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 12; ++iter) {
    GroupPoint x = random_group_point(rng, 2, 1, 0);
    GroupPoint y = random_group_point(rng, 2, 1, 0);
    auto ax = algebra_closure(x), ay = algebra_closure(y), axy = algebra_closure(x.concat(y));
    CHECK(axy.dim >= std::max(ax.dim, ay.dim));
  }
}

TEST_CASE("representation checker") {
  RepPresentation z2{2, {{1, 2, -1, -2}}};

  GroupPoint commuting(Group::GL, Kind::GroupTuple,
                       {Matrix::ints({{1, 0}, {0, 2}}),
                        Matrix::from_rows({{Scalar::integer(3), Scalar::integer(0)},
                                           {Scalar::integer(0), Scalar::rational(1, 3)}})});
  auto rep = classify_rep(z2, commuting);
  CHECK(rep.reductive);
  CHECK(!rep.irreducible);

  GroupPoint broken(Group::GL, Kind::GroupTuple,
                    {Matrix::ints({{1, 0}, {0, 2}}), Matrix::ints({{0, 1}, {1, 0}})});
  try {
    classify_rep(z2, broken);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RelatorViolation);
    CHECK(e.where().find("relators[0]") != std::string::npos);
  }

  RepPresentation free2{2, {}};
  auto good = classify_rep(free2, example_quaternion_pair());
  CHECK(good.reductive);
  CHECK(good.irreducible);
  CHECK(good.good);

  // empty relator word is the trivial relator and always passes
  RepPresentation with_trivial{2, {{}}};
  CHECK(classify_rep(with_trivial, commuting).reductive);

  CHECK_THROWS_AS(classify_rep(RepPresentation{3, {}}, commuting), Error);
}

TEST_CASE("degenerate lie tuple: the zero matrix") {
  GroupPoint x(Group::SL, Kind::LieTuple, {Matrix::zero(2, Field::Q)});
  auto r = classify(x);
  CHECK(r.polystable);
  CHECK(!r.stable);
}
