#pragma once

#include <vector>

#include "pstab/matrix.hpp"

namespace pstab {

/// Linear subspace of k^n in canonical form: the stored basis is the reduced
/// row echelon form of any spanning set, so equal subspaces compare equal
/// entry-for-entry. Vectors are acted on by matrices from the left (columns).
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace from_rows(const std::vector<std::vector<Scalar>>& rows, size_t ambient, Field f);
  static Subspace from_matrix_rows(const Matrix& rows);
  static Subspace zero(size_t ambient, Field f) { return Subspace(ambient, Matrix(0, ambient, f)); }
  static Subspace full(size_t ambient, Field f) {
    return Subspace(ambient, Matrix::identity(ambient, f));
  }
  /// Span of the columns of m.
  static Subspace column_span(const Matrix& m);

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  Field field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains_vector(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Is m V contained in V?
  bool invariant_under(const Matrix& m) const;
  /// Span of { m v : v in V }.
  Subspace image_under(const Matrix& m) const;
  Subspace sum(const Subspace& other) const;
  Subspace lifted() const;

 private:
  Subspace(size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  size_t ambient_;
  Matrix basis_;  // dim x ambient, canonical RREF
};

/// Strictly increasing chain of proper nonzero subspaces of a common ambient space.
class Flag {
 public:
  explicit Flag(std::vector<Subspace> steps);

  const std::vector<Subspace>& steps() const { return steps_; }
  size_t ambient() const { return steps_.front().ambient(); }
  Field field() const { return steps_.front().field(); }

  bool invariant_under(const Matrix& m) const;

 private:
  std::vector<Subspace> steps_;
};

}  // namespace pstab
