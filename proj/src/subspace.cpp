#include "pstab/subspace.hpp"

namespace pstab {

Subspace Subspace::from_rows(const std::vector<std::vector<Scalar>>& rows, size_t ambient, Field f) {
  auto e = rref_rows(rows, ambient, f);
  return Subspace(ambient, e.basis);
}

Subspace Subspace::from_matrix_rows(const Matrix& rows) {
  auto e = rref(rows);
  return Subspace(rows.cols(), e.basis);
}

Subspace Subspace::column_span(const Matrix& m) {
  return from_matrix_rows(m.transpose());
}

bool Subspace::contains_vector(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) fail(Errc::SizeMismatch, "vector/ambient mismatch");
  SpanBuilder span(ambient_, basis_.field());
  for (size_t i = 0; i < basis_.rows(); ++i) span.add(basis_.row(i));
  return span.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::SizeMismatch, "ambient mismatch");
  SpanBuilder span(ambient_, basis_.field());
  for (size_t i = 0; i < basis_.rows(); ++i) span.add(basis_.row(i));
  for (size_t i = 0; i < other.basis_.rows(); ++i)
    if (!span.contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::invariant_under(const Matrix& m) const {
  if (m.n() != ambient_) fail(Errc::SizeMismatch, "operator/ambient mismatch");
  SpanBuilder span(ambient_, basis_.field());
  for (size_t i = 0; i < basis_.rows(); ++i) span.add(basis_.row(i));
  for (size_t i = 0; i < basis_.rows(); ++i) {
    // image of the i-th basis vector under the column action
    std::vector<Scalar> img(ambient_, Scalar::zero(basis_.field()));
    for (size_t r = 0; r < ambient_; ++r)
      for (size_t c = 0; c < ambient_; ++c) img[r] += m.at(r, c) * basis_.at(i, c);
    if (!span.contains(img)) return false;
  }
  return true;
}

Subspace Subspace::image_under(const Matrix& m) const {
  if (m.n() != ambient_) fail(Errc::SizeMismatch, "operator/ambient mismatch");
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    std::vector<Scalar> img(ambient_, Scalar::zero(basis_.field()));
    for (size_t r = 0; r < ambient_; ++r)
      for (size_t c = 0; c < ambient_; ++c) img[r] += m.at(r, c) * basis_.at(i, c);
    rows.push_back(std::move(img));
  }
  return from_rows(rows, ambient_, basis_.field());
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::SizeMismatch, "ambient mismatch");
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  for (size_t i = 0; i < other.basis_.rows(); ++i) rows.push_back(other.basis_.row(i));
  return from_rows(rows, ambient_, basis_.field());
}

Subspace Subspace::lifted() const { return Subspace(ambient_, basis_.rows() == 0 ? Matrix(0, ambient_, Field::QI) : basis_.lifted()); }

Flag::Flag(std::vector<Subspace> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) fail(Errc::BadValue, "empty flag");
  size_t ambient = steps_.front().ambient();
  if (steps_.front().is_zero()) fail(Errc::BadValue, "first flag step is zero");
  if (steps_.back().is_full()) fail(Errc::BadValue, "last flag step is the full space");
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].ambient() != ambient) fail(Errc::SizeMismatch, "flag steps in different ambients");
    if (i > 0) {
      if (!(steps_[i].contains(steps_[i - 1]) && steps_[i].dim() > steps_[i - 1].dim()))
        fail(Errc::BadValue, "flag steps must strictly increase");
    }
  }
}

bool Flag::invariant_under(const Matrix& m) const {
  for (const auto& s : steps_)
    if (!s.invariant_under(m)) return false;
  return true;
}

}  // namespace pstab
