#include "pstab/algebra.hpp"

#include <algorithm>

namespace pstab {

std::vector<Matrix> AlgebraData::radical_matrices() const {
  std::vector<Matrix> out;
  for (size_t r = 0; r < radical.dim(); ++r) {
    Matrix m = Matrix::zero(n, field);
    for (size_t b = 0; b < dim; ++b) {
      const Scalar& c = radical.basis().at(r, b);
      if (c.is_zero()) continue;
      m = m + basis[b].scaled(c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> commutant_of(const std::vector<Matrix>& mats, size_t n, Field f) {
  // Equations (g m - m g)_{a,b} = 0, unknowns g in row-major coordinates.
  std::vector<std::vector<Scalar>> rows;
  for (const auto& m : mats) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        std::vector<Scalar> row(n * n, Scalar::zero(f));
        for (size_t c = 0; c < n; ++c) {
          row[a * n + c] += m.at(c, b);
          row[c * n + b] -= m.at(a, c);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix system = rows.empty() ? Matrix(0, n * n, f) : Matrix::from_rows(rows);
  Matrix kern = kernel_basis(system);
  std::vector<Matrix> out;
  for (size_t i = 0; i < kern.rows(); ++i) out.push_back(Matrix::from_vector(kern.row(i), n));
  return out;
}

AlgebraData algebra_closure(const GroupPoint& x) {
  size_t n = x.n();
  Field f = x.field();
  AlgebraData a;
  a.n = n;
  a.field = f;

  SpanBuilder span(n * n, f);
  std::vector<Matrix> frontier;
  auto feed = [&](const Matrix& m) {
    if (span.add(m.vectorized())) frontier.push_back(m);
  };
  feed(Matrix::identity(n, f));
  for (const auto& g : x.mats()) feed(g);

  // Right-multiplication closure from a span containing the identity covers
  // every word in the generators.
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& w : frontier)
      for (const auto& g : x.mats()) {
        Matrix prod = w * g;
        if (span.add(prod.vectorized())) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }

  for (const auto& row : span.basis()) a.basis.push_back(Matrix::from_vector(row, n));
  a.dim = a.basis.size();
  require_internal(a.dim >= 1 && a.dim <= n * n, "algebra dimension bounds");

  if (x.kind() == Kind::GroupTuple) {
    for (const auto& g : x.mats())
      require_internal(span.contains(inverse(g).vectorized()),
                       "generator inverse lies in the unital span");
  }

  a.gram = Matrix(a.dim, a.dim, f);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = i; j < a.dim; ++j) {
      Scalar t = (a.basis[i] * a.basis[j]).trace();
      a.gram.at(i, j) = t;
      a.gram.at(j, i) = t;
    }

  Matrix rad_kernel = kernel_basis(a.gram);
  a.radical = Subspace::from_matrix_rows(rad_kernel);
  a.radical_dim = a.radical.dim();

  a.commutant_basis = commutant_of(x.mats(), n, f);
  a.commutant_dim = a.commutant_basis.size();
  require_internal(a.commutant_dim >= 1, "commutant contains the scalars");
  return a;
}

bool is_irreducible(const AlgebraData& a) { return a.dim == a.n * a.n; }

bool is_completely_reducible(const AlgebraData& a) { return a.radical_dim == 0; }

bool is_isotropic(const AlgebraData& a, Group) {
  return is_completely_reducible(a) && a.commutant_dim == 1;
}

std::optional<Subspace> radical_invariant_subspace(const AlgebraData& a) {
  if (a.radical_dim == 0) return std::nullopt;
  Subspace image = Subspace::zero(a.n, a.field);
  for (const auto& r : a.radical_matrices()) image = image.sum(Subspace::column_span(r));
  require_internal(!image.is_zero() && !image.is_full(), "radical image is proper and nonzero");
  return image;
}

namespace {

// Coordinates of a traceless matrix in the basis: off-diagonal E_ij
// (row-major), then H_i = E_ii - E_{i+1,i+1}. The H-coordinates are the
// prefix sums of the diagonal.
std::vector<Scalar> traceless_coords(const Matrix& m) {
  size_t n = m.n();
  Field f = m.field();
  std::vector<Scalar> out;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(m.at(i, j));
  Scalar prefix = Scalar::zero(f);
  for (size_t i = 0; i + 1 < n; ++i) {
    prefix += m.at(i, i);
    out.push_back(prefix);
  }
  return out;
}

std::vector<Matrix> traceless_basis(size_t n, Field f) {
  std::vector<Matrix> basis;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) {
        Matrix e = Matrix::zero(n, f);
        e.at(i, j) = Scalar::one(f);
        basis.push_back(std::move(e));
      }
  for (size_t i = 0; i + 1 < n; ++i) {
    Matrix h = Matrix::zero(n, f);
    h.at(i, i) = Scalar::one(f);
    h.at(i + 1, i + 1) = -Scalar::one(f);
    basis.push_back(std::move(h));
  }
  return basis;
}

GroupPoint ad_on_basis(const GroupPoint& x, const std::vector<Matrix>& module_basis,
                       std::vector<Scalar> (*coords)(const Matrix&)) {
  if (module_basis.empty()) fail(Errc::Unsupported, "adjoint module is zero-dimensional");
  std::vector<Matrix> images;
  size_t m = module_basis.size();
  for (const auto& g : x.mats()) {
    Matrix gi = inverse(g);
    Matrix ad(m, m, x.field());
    for (size_t col = 0; col < m; ++col) {
      Matrix img = g * module_basis[col] * gi;
      auto c = coords(img);
      for (size_t row = 0; row < m; ++row) ad.at(row, col) = c[row];
    }
    images.push_back(std::move(ad));
  }
  return GroupPoint(Group::GL, Kind::GroupTuple, std::move(images));
}

std::vector<Scalar> full_coords(const Matrix& m) { return m.vectorized(); }

}  // namespace

GroupPoint ad_matrices(const GroupPoint& x) {
  if (x.kind() != Kind::GroupTuple) fail(Errc::BadValue, "adjoint matrices need a group tuple");
  size_t n = x.n();
  Field f = x.field();
  if (x.group() == Group::SL) return ad_on_basis(x, traceless_basis(n, f), traceless_coords);
  std::vector<Matrix> eij;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix e = Matrix::zero(n, f);
      e.at(i, j) = Scalar::one(f);
      eij.push_back(std::move(e));
    }
  return ad_on_basis(x, eij, full_coords);
}

GroupPoint ad_matrices_traceless(const GroupPoint& x) {
  if (x.kind() != Kind::GroupTuple) fail(Errc::BadValue, "adjoint matrices need a group tuple");
  return ad_on_basis(x, traceless_basis(x.n(), x.field()), traceless_coords);
}

}  // namespace pstab
