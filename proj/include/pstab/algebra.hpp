#pragma once

#include <optional>
#include <vector>

#include "pstab/group_point.hpp"
#include "pstab/subspace.hpp"

namespace pstab {

/// The unital matrix algebra generated by a tuple's entries, with the data
/// the classification criteria read off it: trace Gram matrix, radical
/// (trace-form kernel; chararacteristic zero), and commutant.
struct AlgebraData {
  size_t n = 0;
  Field field = Field::Q;
  std::vector<Matrix> basis;       // canonical echelonized basis, identity in span
  size_t dim = 0;
  Matrix gram;                     // gram[i][j] = tr(basis_i basis_j)
  Subspace radical;                // coordinates in the basis (ambient = dim)
  size_t radical_dim = 0;
  std::vector<Matrix> commutant_basis;
  size_t commutant_dim = 0;

  std::vector<Matrix> radical_matrices() const;
};

/// Breadth-first span closure: multiply the current basis by the generators,
/// echelonize, stop when the span is stable. Generator inverses are not
/// added; Cayley-Hamilton puts them in the unital span already (verified
/// against the final basis for group tuples).
AlgebraData algebra_closure(const GroupPoint& x);

/// Burnside: the algebra acts irreducibly iff it is everything.
bool is_irreducible(const AlgebraData& a);

/// Trace-form criterion: semisimple iff the Gram matrix is nonsingular.
bool is_completely_reducible(const AlgebraData& a);

/// Completely reducible with scalar commutant; units of the commutant then
/// match the center of GL_n and SL_n alike.
bool is_isotropic(const AlgebraData& a, Group group);

/// rad(A) . V, a proper nonzero invariant subspace when the radical is
/// nonzero; nothing otherwise.
std::optional<Subspace> radical_invariant_subspace(const AlgebraData& a);

/// Matrices of v -> g v g^{-1} for each tuple entry: on M_n (basis E_ij,
/// row-major) for GL tuples, on the trace-zero subspace (off-diagonal E_ij
/// then E_ii - E_{i+1,i+1}) for SL tuples.
GroupPoint ad_matrices(const GroupPoint& x);

/// Same, restricted to the trace-zero subspace regardless of the group tag;
/// the adjoint irreducibility check runs here (scalars are always invariant
/// inside all of M_n, so the full space is never irreducible).
GroupPoint ad_matrices_traceless(const GroupPoint& x);

/// Commutant of an arbitrary list of same-size matrices (kernel of
/// g -> (g m_i - m_i g)_i).
std::vector<Matrix> commutant_of(const std::vector<Matrix>& mats, size_t n, Field f);

}  // namespace pstab
