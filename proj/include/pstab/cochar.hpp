#pragma once

#include <optional>
#include <vector>

#include "pstab/group_point.hpp"
#include "pstab/subspace.hpp"

namespace pstab {

/// One-parameter subgroup of GL_n/SL_n in the extrinsic form
/// lambda(t) = h . diag(t^{k_1}, ..., t^{k_n}) . h^{-1} with h invertible.
class Cochar {
 public:
  Cochar(std::vector<long long> weights, Matrix conjugator);
  static Cochar diagonal(std::vector<long long> weights, size_t n, Field f);
  static Cochar trivial(size_t n, Field f);

  size_t n() const { return weights_.size(); }
  Field field() const { return h_.field(); }
  const std::vector<long long>& weights() const { return weights_; }
  const Matrix& conjugator() const { return h_; }
  const Matrix& conjugator_inv() const { return h_inv_; }

  bool is_trivial() const;
  /// Central in GL_n: all weights equal (lambda(t) is scalar).
  bool is_central() const;
  long long weight_sum() const;

  /// lambda^{-1}: negated weights, same conjugator.
  Cochar opposite() const;

  bool operator==(const Cochar& o) const { return weights_ == o.weights_ && h_ == o.h_; }

 private:
  std::vector<long long> weights_;
  Matrix h_;
  Matrix h_inv_;
};

/// Limit of the conjugation ray t -> lambda(t) g lambda(t)^{-1} at t = 0.
/// Exists iff, in the h-basis, every entry whose row weight is smaller than
/// its column weight vanishes (those scale as negative powers of t); the
/// limit keeps exactly the equal-weight block diagonal. The same formula
/// covers group elements and adjoint (Lie) arguments.
std::optional<Matrix> limit_conj(const Cochar& lambda, const Matrix& g);

/// Componentwise limit of a tuple; exists iff every component limit exists.
/// Under SL the weight sum must be zero.
std::optional<GroupPoint> limit_tuple(const Cochar& lambda, const GroupPoint& x);

bool in_parabolic(const Cochar& lambda, const Matrix& g);   // limit exists
bool in_levi(const Cochar& lambda, const Matrix& g);        // limit == g
bool in_unipotent_radical(const Cochar& lambda, const Matrix& g);  // limit == identity

struct WeightComponent {
  long long weight;
  Matrix component;
};

/// Decomposition of v into adjoint weight components: conjugate to the
/// h-basis, split entries by k_i - k_j, conjugate back. Components are
/// nonzero, weights strictly increasing, and they sum to v.
struct WeightDecomp {
  std::vector<WeightComponent> parts;
  Matrix reconstruct() const;
};

WeightDecomp weight_decomp(const Cochar& lambda, const Matrix& v);

/// Least weight carrying a nonzero component of v (v != 0 required).
long long mu(const Cochar& lambda, const Matrix& v);

/// Cochar adapted to a flag: the conjugator's columns run through the flag
/// steps (completed greedily by standard basis vectors), weights are constant
/// on each step, strictly decreasing, and zero on the final complement; under
/// SL they are recentered to sum to zero. Any tuple preserving every flag
/// subspace lies in the resulting parabolic, with block-diagonal limit.
Cochar flag_to_cochar(const Flag& flag, Group group);

/// All cochars with weights in [-B, B]^n (sum zero under SL) and conjugator
/// drawn from the pool, filtered by existence of the tuple limit.
/// Permutation conjugators are folded into permuted diagonal weights and
/// central cochars are normalized to the identity conjugator before
/// deduplication by (conjugator index, weights); the result is sorted by that
/// same key.
std::vector<Cochar> lambda_sample(const GroupPoint& x, long long bound,
                                  const std::vector<Matrix>& conjugators);

std::vector<Matrix> permutation_matrices(size_t n, Field f);

}  // namespace pstab
