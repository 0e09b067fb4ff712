#include "pstab/corpus.hpp"

#include <algorithm>

namespace pstab {

GroupPoint example_sl2_diag() {
  return GroupPoint(Group::SL, Kind::LieTuple, {Matrix::ints({{1, 0}, {0, 2}})});
}

GroupPoint example_sl2_scalar() {
  return GroupPoint(Group::SL, Kind::LieTuple, {Matrix::ints({{1, 0}, {0, 1}})});
}

GroupPoint example_sl2_shear() {
  return GroupPoint(Group::SL, Kind::LieTuple, {Matrix::ints({{1, 1}, {0, 1}})});
}

GroupPoint example_quaternion_pair() {
  Matrix g1 = Matrix::diagonal({Scalar::i(), -Scalar::i()});
  Matrix g2 = Matrix::from_rows({{Scalar::zero(Field::QI), Scalar::one(Field::QI)},
                                 {-Scalar::one(Field::QI), Scalar::zero(Field::QI)}});
  return GroupPoint(Group::GL, Kind::GroupTuple, {g1, g2});
}

void CaseResult::check(bool ok, const std::string& what) {
  details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
  if (!ok) pass = false;
}

namespace {

CaseResult case_diag(unsigned long long seed) {
  CaseResult c{"example-sl2-diagonal"};
  GroupPoint x = example_sl2_diag();
  auto rep = classify(x, seed);
  c.check(rep.polystable, "diag(1,2) is polystable");
  c.check(!rep.stable, "diag(1,2) is not stable");
  c.check(rep.dims.commutant_dim == 2, "commutant is the diagonal algebra (dim 2)");
  auto ha = h_approx(x, 1);
  c.check(ha.upper_dim == 1, "sampled parabolic intersection is the diagonal torus (dim 1)");
  return c;
}

CaseResult case_scalar(unsigned long long) {
  CaseResult c{"example-sl2-scalar"};
  GroupPoint x = example_sl2_scalar();
  auto rep = classify(x);
  c.check(rep.polystable, "a scalar matrix is a fixed point, hence polystable");
  c.check(!rep.stable, "a scalar matrix is not stable");
  auto sample = lambda_sample(x, 2, conjugator_pool(x));
  // every admissible SL_2 weight vector (w, -w), w in [-2, 2], admits the limit
  c.check(sample.size() == 5, "every sampled cochar keeps the scalar point");
  bool all_limits = std::all_of(sample.begin(), sample.end(), [&](const Cochar& l) {
    auto lim = limit_tuple(l, x);
    return lim && *lim == x;
  });
  c.check(all_limits, "all limits exist and equal the point itself");
  Matrix minus_i = Matrix::ints({{-1, 0}, {0, -1}});
  auto ha = h_approx(x, 2, {}, {minus_i});
  c.check(ha.members.size() == 1 && ha.members[0].second,
          "the center of SL_2 sits inside the sampled parabolic intersection");
  c.details.push_back("note: the intersection of all R-parabolics of SL_2 contains the center "
                      "{+-I}; a strictly trivial intersection is not attainable");
  return c;
}

CaseResult case_shear(unsigned long long seed) {
  CaseResult c{"example-sl2-shear"};
  GroupPoint x = example_sl2_shear();
  auto rep = classify(x, seed);
  c.check(!rep.polystable, "the shear's orbit is not closed");
  c.check(rep.witness.has_value(), "a destabilizing witness is produced");
  if (rep.witness) {
    c.check(rep.witness->cochar.weights() == std::vector<long long>{1, -1},
            "witness weights are (1,-1)");
    c.check(rep.witness->cochar.conjugator().is_identity(), "witness conjugator is the identity");
    c.check(rep.witness->limit.mat(0).is_identity(), "the limit is the identity matrix");
    c.check(!rep.witness->limit_in_orbit, "the limit lies outside the orbit");
    c.check(classify(rep.witness->limit, seed).polystable, "the limit itself is polystable");
  }
  auto ha = h_approx(x, 1);
  c.check(ha.upper_dim == 2, "sampled parabolic intersection is the Borel (dim 2 in sl_2)");
  return c;
}

CaseResult case_quaternions(unsigned long long seed) {
  CaseResult c{"example-gl2-quaternion-pair"};
  GroupPoint x = example_quaternion_pair();
  auto a = algebra_closure(x);
  c.check(a.dim == 4, "the pair generates all of M_2 (dim 4)");
  c.check(a.radical_dim == 0, "semisimple envelope");
  c.check(a.commutant_dim == 1, "centralizer is the scalars");
  auto rep = classify(x, seed);
  c.check(rep.polystable && rep.stable && rep.equicentral,
          "polystable, stable and equicentral all hold");
  auto sample = lambda_sample(x, 2, conjugator_pool(x));
  bool only_central = std::all_of(sample.begin(), sample.end(),
                                  [](const Cochar& l) { return l.is_central(); });
  c.check(only_central, "only central cochars keep the pair");
  auto ha = h_approx(x, 2);
  c.check(ha.flag_subspaces.empty() && ha.upper_dim == 4,
          "no proper flag is sampled; the bound is the whole group");
  return c;
}

CaseResult case_exp_limits(unsigned long long) {
  CaseResult c{"exp-nilpotent-limit-equivalence"};
  std::vector<Matrix> nilpotents = {
      Matrix::ints({{0, 1}, {0, 0}}),
      Matrix::ints({{0, 0}, {1, 0}}),
      Matrix::ints({{2, -2}, {2, -2}}),
      Matrix::ints({{0, 1, 2}, {0, 0, 1}, {0, 0, 0}}),
      Matrix::ints({{1, 1, -1}, {1, 1, -1}, {2, 2, -2}}),
  };
  size_t violations = 0, checks = 0;
  for (const auto& v : nilpotents) {
    size_t n = v.n();
    std::vector<Matrix> pool = permutation_matrices(n, v.field());
    Matrix ev = exp_nilpotent(v);
    for (long long b = 1; b <= 2; ++b)
      for (const auto& h : pool) {
        // all weight vectors in [-b, b]^n for this conjugator
        std::vector<long long> w(n, -b);
        bool more = true;
        while (more) {
          Cochar lambda(w, h);
          ++checks;
          bool lim_v = limit_conj(lambda, v).has_value();
          bool lim_e = limit_conj(lambda, ev).has_value();
          if (lim_v != lim_e) ++violations;
          size_t pos = 0;
          for (; pos < n; ++pos) {
            if (w[pos] < b) {
              ++w[pos];
              break;
            }
            w[pos] = -b;
          }
          more = pos < n;
        }
      }
  }
  c.check(violations == 0,
          "limit of exp(v) exists exactly when the limit of v does (" +
              std::to_string(checks) + " checks)");
  return c;
}

}  // namespace

std::vector<CaseResult> run_corpus(unsigned long long seed) {
  std::vector<CaseResult> out;
  out.push_back(case_diag(seed));
  out.push_back(case_scalar(seed));
  out.push_back(case_shear(seed));
  out.push_back(case_quaternions(seed));
  out.push_back(case_exp_limits(seed));
  return out;
}

}  // namespace pstab
