#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pstab/algebra.hpp"
#include "pstab/cochar.hpp"

namespace pstab {

struct Dims {
  size_t algebra_dim = 0;
  size_t radical_dim = 0;
  size_t commutant_dim = 0;
  size_t stabilizer_dim = 0;
};

/// A one-parameter subgroup driving the tuple out of its orbit: the flag is
/// invariant under every tuple entry, the cochar is flag-adapted, and the
/// limit is the block-diagonal associated graded. limit_in_orbit == false
/// certifies that the orbit is not closed.
struct DestabWitness {
  Cochar cochar;
  GroupPoint limit;
  bool limit_in_orbit = false;
  Flag flag;
};

struct ClassificationReport {
  bool irreducible = false;
  bool completely_reducible = false;
  bool isotropic = false;
  bool polystable = false;
  bool stable = false;
  bool equicentral = false;
  Dims dims;
  std::optional<DestabWitness> witness;
  std::vector<std::string> notes;
};

/// Full stability verdict for a tuple: orbit closed iff the generated algebra
/// is semisimple, stable iff it is everything, equicentral iff additionally
/// the commutant is scalar. Dimension-based tests are invariant under field
/// extension, so the verdicts hold over the algebraic closure; explicit
/// witnesses are searched over the working field only.
ClassificationReport classify(const GroupPoint& x, unsigned long long seed = 0);

/// Destabilizing witness from the radical filtration rad^k(A).V, or nothing
/// when the algebra is semisimple (closed orbit). The limit along the
/// returned cochar is polystable.
std::optional<DestabWitness> destabilize(const GroupPoint& x, unsigned long long seed = 0);

struct OrbitDecision {
  bool in_orbit = false;
  std::optional<Matrix> witness;  // invertible intertwiner, when in_orbit
  // SL tuples: can the found intertwiner be rescaled to det 1 over the field?
  // "rational" / "irrational" / "unknown" / "n/a" (GL or not in orbit).
  std::string sl_scaling = "n/a";
  bool used_random = false;
  unsigned long long seed = 0;
};

/// Exact orbit membership for simultaneous conjugation, decided over the
/// algebraic closure: the intertwiner space is cut out by linear equations,
/// and det restricted to it vanishes identically iff no invertible
/// intertwiner exists over any extension. Small solution spaces are decided
/// on the grid {0..n}^m; larger ones by seeded Schwartz-Zippel evaluation.
OrbitDecision orbit_member(const GroupPoint& x, const GroupPoint& y,
                           unsigned long long seed = 0);

/// Conjugators harvested from the tuple: identity, all permutations
/// (sampling is limited to n <= 4), and flag-adapted bases of every invariant
/// subspace found over the working field (radical filtration images,
/// spin-ups of eigenvectors for field eigenvalues of the generators).
std::vector<Matrix> conjugator_pool(const GroupPoint& x);

/// Invariant subspaces the pool is built from (also used for witness notes).
std::vector<Subspace> harvest_invariant_subspaces(const GroupPoint& x);

/// Eigenvalues of m lying in its coefficient field (rational root search on
/// the characteristic polynomial; over Q(i) purely imaginary candidates are
/// tried as well). An under-approximation by design.
std::vector<Scalar> field_eigenvalues(const Matrix& m);

struct HmLambdaOutcome {
  Cochar cochar;
  bool central = false;
  bool limit_in_orbit = false;
  bool opposite_fixes_limit = false;
};

struct HmReport {
  long long bound = 2;
  unsigned long long seed = 0;
  ClassificationReport base;
  size_t sampled = 0;
  std::vector<HmLambdaOutcome> lambdas;
  std::vector<std::string> violations;
  bool consistent = true;
};

/// Bounded Hilbert-Mumford cross-check of the algebraic verdict:
///  (a) polystable  => every sampled limit lies in the orbit and the opposite
///      cochar fixes it;
///  (b) stable      => every sampled cochar with existing limit is central;
///  (c) unstable    => the destabilizing witness leaves the orbit and its limit
///      turns polystable within n-1 refinements.
HmReport hm_crosscheck(const GroupPoint& x, long long bound, unsigned long long seed = 0);

struct HApproxReport {
  size_t upper_dim = 0;      // Lie dimension of the sampled flag stabilizer
  size_t lower_dim = 0;      // coarse certified lower bound (unipotent logs)
  size_t sampled = 0;
  std::vector<Subspace> flag_subspaces;
  std::vector<std::pair<Matrix, bool>> members;  // supplied matrices + membership
  bool words_contained = true;  // generator words up to length 3 pass membership
  std::vector<std::string> notes;
};

/// Finite-sample approximation of the intersection of the parabolic subgroups
/// over the sampled cochars, represented as the common stabilizer of their
/// weight flags. The reported dimension is an upper bound for the true
/// intersection over all of Lambda_x.
HApproxReport h_approx(const GroupPoint& x, long long bound,
                       const std::vector<Matrix>& extra_conjugators = {},
                       const std::vector<Matrix>& members = {});

/// Finite presentation: relators are words in signed 1-based generator
/// indices (-k meaning the inverse of generator k).
struct RepPresentation {
  size_t n_generators = 0;
  std::vector<std::vector<int>> relators;
};

struct RepReport {
  bool reductive = false;
  bool irreducible = false;
  bool good = false;
  ClassificationReport classification;
  std::vector<std::string> notes;
};

/// Check that the images satisfy every relator (error naming the first
/// failing one otherwise), then classify the image tuple. Reductive /
/// irreducible / good are the representation-variety names for polystable /
/// stable / isotropic-image.
RepReport classify_rep(const RepPresentation& pres, const GroupPoint& images,
                       unsigned long long seed = 0);

}  // namespace pstab
