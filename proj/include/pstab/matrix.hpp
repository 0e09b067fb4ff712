#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "pstab/scalar.hpp"

namespace pstab {

/// Dense exact matrix. Domain objects are square; row-echelon plumbing also
/// handles rectangular shapes. All entries share one field tag.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(Field::Q) {}
  Matrix(size_t rows, size_t cols, Field f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(size_t n, Field f);
  static Matrix zero(size_t n, Field f) { return Matrix(n, n, f); }
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix diagonal(const std::vector<Scalar>& d);
  /// Small-integer literal helper for tests and built-in examples.
  static Matrix ints(std::initializer_list<std::initializer_list<long>> rows, Field f = Field::Q);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length; NotSquare error on rectangular input.
  size_t n() const;

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Scalar trace() const;
  Matrix lifted() const;  // same entries in Q(i)

  std::vector<Scalar> row(size_t i) const;
  /// Row-major flattening (used to treat matrices as vectors of length rows*cols).
  std::vector<Scalar> vectorized() const;
  static Matrix from_vector(const std::vector<Scalar>& v, size_t n);

  Matrix pow(unsigned long e) const;

 private:
  size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix basis;                 // canonical reduced row-echelon form, zero rows dropped
  size_t rank = 0;
  std::vector<size_t> pivots;   // strictly increasing pivot columns
};

/// Canonical reduced row echelon form. Pivot selection is first nonzero
/// left-to-right, so equal row spans produce identical outputs.
RrefResult rref(const Matrix& m);
RrefResult rref_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols, Field f);

/// Canonical basis of the right null space { v : m v = 0 }, as rows.
Matrix kernel_basis(const Matrix& m);

Scalar det(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);  // SingularMatrix error on det == 0

/// Monic characteristic polynomial coefficients c[0..n], c[n] = 1
/// (Faddeev-LeVerrier; exact).
std::vector<Scalar> charpoly(const Matrix& m);

Matrix exp_nilpotent(const Matrix& v);  // BadValue if v is not nilpotent
bool is_nilpotent(const Matrix& v);

/// Incremental echelon span tracker: feed row vectors, keep a reduced basis.
class SpanBuilder {
 public:
  SpanBuilder(size_t width, Field f) : width_(width), field_(f) {}

  /// Reduce v against the basis; if independent, insert and return true.
  bool add(std::vector<Scalar> v);
  /// Residue of v after reduction (zero vector iff v lies in the span).
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;

  size_t dim() const { return rows_.size(); }
  /// Canonical RREF rows, sorted by pivot.
  std::vector<std::vector<Scalar>> basis() const;

 private:
  size_t width_;
  Field field_;
  std::vector<std::pair<size_t, std::vector<Scalar>>> rows_;  // (pivot, normalized row), sorted
};

}  // namespace pstab
