#include "pstab/matrix.hpp"

#include <algorithm>

namespace pstab {

Matrix Matrix::identity(size_t n, Field f) {
  Matrix m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows[0].empty()) fail(Errc::BadValue, "empty matrix");
  Field f = rows[0][0].field();
  Matrix m(rows.size(), rows[0].size(), f);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) fail(Errc::SizeMismatch, "ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].field() != f) fail(Errc::FieldMismatch, "mixed field tags in matrix");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  if (d.empty()) fail(Errc::BadValue, "empty diagonal");
  Matrix m(d.size(), d.size(), d[0].field());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i].field() != m.field_) fail(Errc::FieldMismatch, "mixed field tags in diagonal");
    m.at(i, i) = d[i];
  }
  return m;
}

Matrix Matrix::ints(std::initializer_list<std::initializer_list<long>> rows, Field f) {
  std::vector<std::vector<Scalar>> conv;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::integer(v, f));
    conv.push_back(std::move(row));
  }
  return from_rows(conv);
}

size_t Matrix::n() const {
  if (!is_square()) fail(Errc::NotSquare, "matrix is not square");
  return rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::SizeMismatch, "shape mismatch in addition");
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::SizeMismatch, "shape mismatch in subtraction");
  Matrix r = *this;
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(Errc::SizeMismatch, "shape mismatch in product");
  if (field_ != o.field_) fail(Errc::FieldMismatch, "mixed field tags in product");
  Matrix r(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.a_) s = -s;
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.a_) s *= c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (size_t i = 0; i < n(); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::lifted() const {
  Matrix r(rows_, cols_, Field::QI);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].lifted();
  return r;
}

std::vector<Scalar> Matrix::row(size_t i) const {
  return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<Scalar> Matrix::vectorized() const { return a_; }

Matrix Matrix::from_vector(const std::vector<Scalar>& v, size_t n) {
  if (v.size() != n * n) fail(Errc::SizeMismatch, "vector length is not n^2");
  Matrix m(n, n, v.empty() ? Field::Q : v[0].field());
  m.a_ = v;
  return m;
}

Matrix Matrix::pow(unsigned long e) const {
  Matrix base = *this;
  Matrix acc = Matrix::identity(n(), field_);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------

bool SpanBuilder::add(std::vector<Scalar> v) {
  v = reduce(std::move(v));
  size_t piv = width_;
  for (size_t j = 0; j < width_; ++j)
    if (!v[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv == width_) return false;
  Scalar lead = v[piv];
  for (auto& s : v) s = s / lead;
  // back-substitute into existing rows to keep the basis fully reduced
  for (auto& [p, row] : rows_) {
    if (!row[piv].is_zero()) {
      Scalar c = row[piv];
      for (size_t j = 0; j < width_; ++j) row[j] -= c * v[j];
    }
  }
  rows_.emplace_back(piv, std::move(v));
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return true;
}

std::vector<Scalar> SpanBuilder::reduce(std::vector<Scalar> v) const {
  if (v.size() != width_) fail(Errc::SizeMismatch, "span width mismatch");
  for (const auto& [piv, row] : rows_) {
    if (!v[piv].is_zero()) {
      Scalar c = v[piv];
      for (size_t j = 0; j < width_; ++j) v[j] -= c * row[j];
    }
  }
  return v;
}

bool SpanBuilder::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::vector<Scalar>> SpanBuilder::basis() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols, Field f) {
  SpanBuilder span(cols, f);
  for (const auto& r : rows) span.add(r);
  RrefResult res;
  res.rank = span.dim();
  auto basis = span.basis();
  if (basis.empty()) {
    res.basis = Matrix(0, cols, f);
    return res;
  }
  res.basis = Matrix::from_rows(basis);
  for (const auto& row : basis)
    for (size_t j = 0; j < cols; ++j)
      if (!row[j].is_zero()) {
        res.pivots.push_back(j);
        break;
      }
  return res;
}

RrefResult rref(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rref_rows(rows, m.cols(), m.field());
}

Matrix kernel_basis(const Matrix& m) {
  // Solve m v = 0 by echelonizing m and reading the free-column solutions,
  // then canonicalize the resulting basis.
  RrefResult e = rref(m);
  size_t nvars = m.cols();
  std::vector<bool> is_pivot(nvars, false);
  for (size_t p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> out;
  for (size_t free_col = 0; free_col < nvars; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(nvars, Scalar::zero(m.field()));
    v[free_col] = Scalar::one(m.field());
    for (size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.basis.at(r, free_col);
    out.push_back(std::move(v));
  }
  if (out.empty()) return Matrix(0, nvars, m.field());
  return rref_rows(out, nvars, m.field()).basis;
}

Scalar det(const Matrix& m) {
  size_t n = m.n();
  Matrix a = m;
  Scalar result = Scalar::one(m.field());
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) return Scalar::zero(m.field());
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      result = -result;
    }
    result *= a.at(col, col);
    Scalar inv_p = Scalar::one(m.field()) / a.at(col, col);
    for (size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col) * inv_p;
      for (size_t j = col; j < n; ++j) a.at(r, j) -= factor * a.at(col, j);
    }
  }
  return result;
}

bool is_invertible(const Matrix& m) { return !det(m).is_zero(); }

Matrix inverse(const Matrix& m) {
  size_t n = m.n();
  // Gauss-Jordan on [m | I]
  Matrix aug(n, 2 * n, m.field());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t r = col; r < n; ++r)
      if (!aug.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == n) fail(Errc::SingularMatrix, "matrix is singular");
    if (piv != col)
      for (size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
    Scalar inv_p = Scalar::one(m.field()) / aug.at(col, col);
    for (size_t j = 0; j < 2 * n; ++j) aug.at(col, j) *= inv_p;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || aug.at(r, col).is_zero()) continue;
      Scalar factor = aug.at(r, col);
      for (size_t j = 0; j < 2 * n; ++j) aug.at(r, j) -= factor * aug.at(col, j);
    }
  }
  Matrix out(n, n, m.field());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::vector<Scalar> charpoly(const Matrix& m) {
  size_t n = m.n();
  Field f = m.field();
  // Faddeev-LeVerrier: M_1 = A; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Scalar> c(n + 1, Scalar::zero(f));
  c[n] = Scalar::one(f);
  Matrix mk = Matrix::identity(n, f);
  for (size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    Scalar ck = -(mk.trace() / Scalar::integer(static_cast<long>(k), f));
    c[n - k] = ck;
    for (size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return c;
}

bool is_nilpotent(const Matrix& v) {
  size_t n = v.n();
  Matrix p = v;
  for (size_t k = 1; k < n; ++k) {
    if (p.is_zero()) return true;
    p = p * v;
  }
  return p.is_zero();
}

Matrix exp_nilpotent(const Matrix& v) {
  size_t n = v.n();
  if (!is_nilpotent(v)) fail(Errc::BadValue, "exp is only defined here for nilpotent arguments");
  Matrix sum = Matrix::identity(n, v.field());
  Matrix term = Matrix::identity(n, v.field());
  for (size_t k = 1; k < n; ++k) {
    term = term * v;
    term = term.scaled(Scalar::rational(1, static_cast<long>(k), v.field()));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

}  // namespace pstab
