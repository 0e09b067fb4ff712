#include "pstab/classify.hpp"

#include <algorithm>
#include <random>

namespace pstab {

namespace {

constexpr unsigned long kDivisorCap = 1000000;

std::vector<mpz_class> divisors_of(const mpz_class& value) {
  std::vector<mpz_class> out;
  mpz_class v = abs(value);
  if (v == 0 || v > kDivisorCap) return out;
  unsigned long n = v.get_ui();
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.emplace_back(d);
    if (d != n / d) out.emplace_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Scalar horner(const std::vector<Scalar>& coeffs, const Scalar& t) {
  Scalar acc = Scalar::zero(t.field());
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

}  // namespace

std::vector<Scalar> field_eigenvalues(const Matrix& m) {
  Field f = m.field();
  std::vector<Scalar> coeffs = charpoly(m);

  // Deflate t = 0 roots, then hunt rational roots of the integerized polynomial.
  std::vector<Scalar> out;
  size_t low = 0;
  while (low < coeffs.size() - 1 && coeffs[low].is_zero()) ++low;
  if (low > 0) out.push_back(Scalar::zero(f));

  bool all_real = std::all_of(coeffs.begin(), coeffs.end(),
                              [](const Scalar& c) { return c.imag() == 0; });
  if (!all_real) return out;  // candidates below assume rational coefficients

  mpz_class den_lcm = 1;
  for (size_t k = low; k < coeffs.size(); ++k)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeffs[k].real().get_den().get_mpz_t());
  mpq_class a0q = coeffs[low].real() * den_lcm;
  mpq_class anq = coeffs.back().real() * den_lcm;
  a0q.canonicalize();
  anq.canonicalize();
  mpz_class a0 = a0q.get_num();
  mpz_class an = anq.get_num();

  auto p_divs = divisors_of(a0);
  auto q_divs = divisors_of(an);
  if (p_divs.empty() || q_divs.empty()) return out;  // constant zero handled above; or cap hit

  for (const auto& p : p_divs)
    for (const auto& q : q_divs) {
      mpq_class cand(p, q);
      cand.canonicalize();
      for (int sign = 0; sign < 2; ++sign) {
        mpq_class c = sign ? mpq_class(-cand) : cand;
        Scalar root = Scalar::make(f, c);
        if (horner(coeffs, root).is_zero() &&
            std::find(out.begin(), out.end(), root) == out.end())
          out.push_back(root);
        if (f == Field::QI) {
          Scalar img = Scalar::make(f, 0, c);
          if (horner(coeffs, img).is_zero() &&
              std::find(out.begin(), out.end(), img) == out.end())
            out.push_back(img);
          Scalar img_neg = Scalar::make(f, 0, -c);
          if (horner(coeffs, img_neg).is_zero() &&
              std::find(out.begin(), out.end(), img_neg) == out.end())
            out.push_back(img_neg);
        }
      }
    }
  return out;
}

namespace {

// Smallest invariant subspace containing v: span of all words applied to v.
Subspace spin_up(const std::vector<Scalar>& v, const GroupPoint& x) {
  size_t n = x.n();
  Field f = x.field();
  SpanBuilder span(n, f);
  std::vector<std::vector<Scalar>> frontier;
  if (span.add(v)) frontier.push_back(v);
  while (!frontier.empty()) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& w : frontier)
      for (const auto& g : x.mats()) {
        std::vector<Scalar> img(n, Scalar::zero(f));
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < n; ++c) img[r] += g.at(r, c) * w[c];
        if (span.add(img)) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return Subspace::from_rows(span.basis(), n, f);
}

void push_unique(std::vector<Subspace>& list, const Subspace& s) {
  if (s.is_zero() || s.is_full()) return;
  if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
}

std::vector<Subspace> radical_filtration(const AlgebraData& a) {
  std::vector<Subspace> chain;  // rad.V, rad^2.V, ... (descending, nonzero)
  auto rad_mats = a.radical_matrices();
  if (rad_mats.empty()) return chain;
  Subspace current = Subspace::full(a.n, a.field);
  while (true) {
    Subspace next = Subspace::zero(a.n, a.field);
    for (const auto& r : rad_mats) next = next.sum(current.image_under(r));
    if (next.is_zero()) break;
    chain.push_back(next);
    current = next;
  }
  return chain;
}

}  // namespace

std::vector<Subspace> harvest_invariant_subspaces(const GroupPoint& x) {
  std::vector<Subspace> out;
  AlgebraData a = algebra_closure(x);
  for (const auto& s : radical_filtration(a)) push_unique(out, s);
  for (const auto& g : x.mats()) {
    for (const auto& ev : field_eigenvalues(g)) {
      Matrix shifted = g - Matrix::identity(x.n(), x.field()).scaled(ev);
      Matrix eig = kernel_basis(shifted);
      if (eig.rows() == 0) continue;
      push_unique(out, spin_up(eig.row(0), x));
      if (eig.rows() > 1) {
        Subspace whole = Subspace::from_matrix_rows(eig);
        Subspace spun = whole;
        for (size_t r = 0; r < eig.rows(); ++r) spun = spun.sum(spin_up(eig.row(r), x));
        push_unique(out, spun);
      }
    }
  }
  return out;
}

std::vector<Matrix> conjugator_pool(const GroupPoint& x) {
  size_t n = x.n();
  Field f = x.field();
  std::vector<Matrix> pool;
  pool.push_back(Matrix::identity(n, f));
  if (n <= 4)
    for (auto& p : permutation_matrices(n, f))
      if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(std::move(p));
  for (const auto& w : harvest_invariant_subspaces(x)) {
    Matrix h = flag_to_cochar(Flag({w}), x.group()).conjugator();
    if (std::find(pool.begin(), pool.end(), h) == pool.end()) pool.push_back(std::move(h));
  }
  return pool;
}

// ---------------------------------------------------------------------------

OrbitDecision orbit_member(const GroupPoint& x, const GroupPoint& y, unsigned long long seed) {
  if (x.group() != y.group() || x.kind() != y.kind() || x.n() != y.n() || x.count() != y.count())
    fail(Errc::SizeMismatch, "orbit test requires matching tags and shapes");
  if (x.field() != y.field()) fail(Errc::FieldMismatch, "orbit test requires one field");
  size_t n = x.n();
  Field f = x.field();

  // Intertwiner space { g : g x_i = y_i g for all i }.
  std::vector<std::vector<Scalar>> rows;
  for (size_t i = 0; i < x.count(); ++i) {
    const Matrix& xm = x.mat(i);
    const Matrix& ym = y.mat(i);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        std::vector<Scalar> row(n * n, Scalar::zero(f));
        for (size_t c = 0; c < n; ++c) {
          row[a * n + c] += xm.at(c, b);
          row[c * n + b] -= ym.at(a, c);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix kern = kernel_basis(Matrix::from_rows(rows));
  size_t m = kern.rows();
  OrbitDecision res;
  res.seed = seed;
  if (m == 0) return res;

  std::vector<Matrix> basis;
  basis.reserve(m);
  for (size_t i = 0; i < m; ++i) basis.push_back(Matrix::from_vector(kern.row(i), n));

  auto combine = [&](const std::vector<Scalar>& c) {
    Matrix g = Matrix::zero(n, f);
    for (size_t k = 0; k < m; ++k)
      if (!c[k].is_zero()) g = g + basis[k].scaled(c[k]);
    return g;
  };

  std::optional<Matrix> found;
  if (m <= 6) {
    // det restricted to the solution space has degree <= n in each coordinate,
    // so vanishing on the full grid {0..n}^m makes it the zero polynomial.
    std::vector<long> c(m, 0);
    bool more = true;
    while (more && !found) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(m);
      for (long v : c) coeffs.push_back(Scalar::integer(v, f));
      Matrix g = combine(coeffs);
      if (!det(g).is_zero()) found = g;
      size_t pos = 0;
      for (; pos < m; ++pos) {
        if (c[pos] < static_cast<long>(n)) {
          ++c[pos];
          break;
        }
        c[pos] = 0;
      }
      more = pos < m;
    }
  } else {
    res.used_random = true;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 32 && !found; ++trial) {
      std::vector<Scalar> coeffs;
      coeffs.reserve(m);
      for (size_t k = 0; k < m; ++k)
        coeffs.push_back(Scalar::make(f, mpq_class(mpz_class(static_cast<unsigned long>(rng())))));
      Matrix g = combine(coeffs);
      if (!det(g).is_zero()) found = g;
    }
  }

  if (!found) return res;
  res.in_orbit = true;
  if (x.group() == Group::SL) {
    NthRootResult root = nth_root_in_field(det(*found), static_cast<unsigned>(n));
    if (root.decided && root.exists) {
      res.sl_scaling = "rational";
      found = found->scaled(Scalar::one(f) / root.root);
    } else if (root.decided) {
      res.sl_scaling = "irrational";
    } else {
      res.sl_scaling = "unknown";
    }
  }
  res.witness = std::move(*found);
  return res;
}

// ---------------------------------------------------------------------------

std::optional<DestabWitness> destabilize(const GroupPoint& x, unsigned long long seed) {
  AlgebraData a = algebra_closure(x);
  auto chain = radical_filtration(a);
  if (chain.empty()) return std::nullopt;

  // ascending flag rad^{m-1}.V < ... < rad.V
  std::vector<Subspace> steps(chain.rbegin(), chain.rend());
  Flag flag(steps);
  for (const auto& g : x.mats())
    require_internal(flag.invariant_under(g), "radical flag invariant under the tuple");

  Cochar lambda = flag_to_cochar(flag, x.group());
  auto limit = limit_tuple(lambda, x);
  require_internal(limit.has_value(), "flag-adapted cochar admits the limit");

  OrbitDecision orbit = orbit_member(x, *limit, seed);
  require_internal(!orbit.in_orbit, "graded limit of a non-semisimple tuple leaves the orbit");
  return DestabWitness{std::move(lambda), std::move(*limit), orbit.in_orbit, std::move(flag)};
}

ClassificationReport classify(const GroupPoint& x, unsigned long long seed) {
  AlgebraData a = algebra_closure(x);
  ClassificationReport r;
  r.irreducible = is_irreducible(a);
  r.completely_reducible = is_completely_reducible(a);
  r.isotropic = is_isotropic(a, x.group());
  r.polystable = r.completely_reducible;
  r.stable = r.irreducible;
  r.equicentral = r.isotropic;
  r.dims.algebra_dim = a.dim;
  r.dims.radical_dim = a.radical_dim;
  r.dims.commutant_dim = a.commutant_dim;
  r.dims.stabilizer_dim = a.commutant_dim - (x.group() == Group::SL ? 1 : 0);

  r.notes.push_back(
      "equicentral assumes the central case (the action's common stabilizer equals the center), "
      "which holds for full tuple spaces over GL_n and SL_n");
  if (x.n() == 1)
    r.notes.push_back("n = 1: the ambient algebra is the scalars, so every point is polystable "
                      "and reports stable/irreducible trivially");

  if (!r.polystable) {
    r.witness = destabilize(x, seed);
    require_internal(r.witness.has_value(), "nonzero radical yields a destabilizing witness");
  } else if (!r.stable) {
    // Negative stability verdicts are dimension-based; a certifying flag may
    // need a field extension (e.g. a rotation matrix over Q).
    if (harvest_invariant_subspaces(x).empty())
      r.notes.push_back("not stable by dimension count, but no invariant flag exists over the "
                        "working field; 1PS witness unavailable");
  }
  return r;
}

// ---------------------------------------------------------------------------

HmReport hm_crosscheck(const GroupPoint& x, long long bound, unsigned long long seed) {
  HmReport rep;
  rep.bound = bound;
  rep.seed = seed;
  rep.base = classify(x, seed);

  auto sample = lambda_sample(x, bound, conjugator_pool(x));
  rep.sampled = sample.size();

  unsigned long long counter = 0;
  for (const auto& lambda : sample) {
    HmLambdaOutcome out{lambda, lambda.is_central(), false, false};
    auto limit = limit_tuple(lambda, x);
    require_internal(limit.has_value(), "sampled cochar admits the limit");
    out.limit_in_orbit = orbit_member(x, *limit, seed + 1000 + counter).in_orbit;
    auto fixed = limit_tuple(lambda.opposite(), *limit);
    out.opposite_fixes_limit = fixed && *fixed == *limit;
    ++counter;

    if (rep.base.polystable) {
      if (!out.limit_in_orbit)
        rep.violations.push_back("polystable point with a sampled limit outside the orbit");
      if (!out.opposite_fixes_limit)
        rep.violations.push_back("polystable point where the opposite cochar moves the limit");
    }
    if (rep.base.stable && !out.central)
      rep.violations.push_back("stable point admitting a non-central cochar limit");
    rep.lambdas.push_back(std::move(out));
  }

  if (!rep.base.polystable) {
    if (!rep.base.witness) {
      rep.violations.push_back("non-polystable point without a destabilizing witness");
    } else {
      if (rep.base.witness->limit_in_orbit)
        rep.violations.push_back("destabilizing witness limit claims to stay in the orbit");
      GroupPoint current = rep.base.witness->limit;
      size_t refinements = 0;
      while (!classify(current, seed + 7777 + refinements).polystable) {
        auto next = destabilize(current, seed + 8888 + refinements);
        require_internal(next.has_value(), "refinement of a non-polystable limit");
        current = next->limit;
        if (++refinements >= x.n()) break;
      }
      if (!classify(current, seed + 9999).polystable)
        rep.violations.push_back("witness limit failed to reach a polystable point within n-1 "
                                 "refinements");
    }
  }
  rep.consistent = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subspace> weight_flag_subspaces(const Cochar& lambda) {
  // span of conjugator columns with weight >= w, for each distinct weight w
  // except the smallest (which spans everything)
  std::vector<Subspace> out;
  std::vector<long long> distinct = lambda.weights();
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  size_t n = lambda.n();
  for (size_t t = 0; t + 1 < distinct.size(); ++t) {
    std::vector<std::vector<Scalar>> rows;
    for (size_t j = 0; j < n; ++j) {
      if (lambda.weights()[j] < distinct[t]) continue;
      std::vector<Scalar> col(n, Scalar::zero(lambda.field()));
      for (size_t i = 0; i < n; ++i) col[i] = lambda.conjugator().at(i, j);
      rows.push_back(std::move(col));
    }
    out.push_back(Subspace::from_rows(rows, n, lambda.field()));
  }
  return out;
}

// Lie algebra of the common flag stabilizer: matrices M with M.V <= V for
// every collected subspace, as a kernel computation in n^2 unknowns.
std::pair<size_t, std::vector<Matrix>> flag_stabilizer_space(
    const std::vector<Subspace>& subspaces, size_t n, Field f) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& V : subspaces) {
    SpanBuilder span(n, f);
    for (size_t i = 0; i < V.basis().rows(); ++i) span.add(V.basis().row(i));
    // residue of each standard vector modulo V; reduce is linear, so
    // reduce(M v) = sum_a (M v)_a residue_a with (M v)_a = sum_b M_{a,b} v_b.
    std::vector<std::vector<Scalar>> residue(n);
    for (size_t a = 0; a < n; ++a) {
      std::vector<Scalar> unit(n, Scalar::zero(f));
      unit[a] = Scalar::one(f);
      residue[a] = span.reduce(unit);
    }
    for (size_t r = 0; r < V.basis().rows(); ++r) {
      auto v = V.basis().row(r);
      for (size_t coord = 0; coord < n; ++coord) {
        std::vector<Scalar> eq(n * n, Scalar::zero(f));
        bool nonzero = false;
        for (size_t a = 0; a < n; ++a) {
          if (residue[a][coord].is_zero()) continue;
          for (size_t b = 0; b < n; ++b) {
            if (v[b].is_zero()) continue;
            eq[a * n + b] += residue[a][coord] * v[b];
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(eq));
      }
    }
  }
  Matrix system = rows.empty() ? Matrix(0, n * n, f) : Matrix::from_rows(rows);
  Matrix kern = kernel_basis(system);
  std::vector<Matrix> basis;
  for (size_t i = 0; i < kern.rows(); ++i) basis.push_back(Matrix::from_vector(kern.row(i), n));
  return {basis.size(), std::move(basis)};
}

}  // namespace

HApproxReport h_approx(const GroupPoint& x, long long bound,
                       const std::vector<Matrix>& extra_conjugators,
                       const std::vector<Matrix>& members) {
  size_t n = x.n();
  Field f = x.field();
  HApproxReport rep;

  std::vector<Matrix> pool = conjugator_pool(x);
  for (const auto& h : extra_conjugators)
    if (std::find(pool.begin(), pool.end(), h) == pool.end()) pool.push_back(h);

  auto sample = lambda_sample(x, bound, pool);
  rep.sampled = sample.size();
  for (const auto& lambda : sample) {
    if (lambda.is_central()) continue;
    for (const auto& V : weight_flag_subspaces(lambda))
      if (std::find(rep.flag_subspaces.begin(), rep.flag_subspaces.end(), V) ==
          rep.flag_subspaces.end())
        rep.flag_subspaces.push_back(V);
  }

  auto [dim_gl, basis] = flag_stabilizer_space(rep.flag_subspaces, n, f);
  if (x.group() == Group::SL) {
    bool has_trace = std::any_of(basis.begin(), basis.end(),
                                 [](const Matrix& m) { return !m.trace().is_zero(); });
    rep.upper_dim = dim_gl - (has_trace ? 1 : 0);
  } else {
    rep.upper_dim = dim_gl;
  }

  // Certified lower bound: each unipotent generator contributes its log
  // direction (the closure of its powers is a one-parameter unipotent line
  // inside the intersection).
  if (x.kind() == Kind::GroupTuple) {
    SpanBuilder logs(n * n, f);
    for (const auto& g : x.mats()) {
      Matrix u = g - Matrix::identity(n, f);
      if (u.is_zero() || !is_nilpotent(u)) continue;
      // log(1 + u) = u - u^2/2 + u^3/3 - ...
      Matrix log = Matrix::zero(n, f);
      Matrix power = Matrix::identity(n, f);
      for (size_t k = 1; k < n; ++k) {
        power = power * u;
        if (power.is_zero()) break;
        Scalar c = Scalar::rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k), f);
        log = log + power.scaled(c);
      }
      logs.add(log.vectorized());
    }
    rep.lower_dim = logs.dim();

    auto in_stabilizer = [&](const Matrix& g) {
      return std::all_of(rep.flag_subspaces.begin(), rep.flag_subspaces.end(),
                         [&](const Subspace& V) { return V.invariant_under(g); });
    };
    std::vector<Matrix> words = {Matrix::identity(n, f)};
    for (int len = 0; len < 3; ++len) {
      std::vector<Matrix> next;
      for (const auto& w : words)
        for (const auto& g : x.mats()) next.push_back(w * g);
      for (const auto& w : next)
        if (!in_stabilizer(w)) rep.words_contained = false;
      words = std::move(next);
    }
    if (!rep.words_contained)
      rep.notes.push_back("a generator word escaped the sampled stabilizer (internal "
                          "inconsistency)");
  } else {
    rep.lower_dim = 0;
    rep.notes.push_back("lower bound applies to group tuples only");
  }

  for (const auto& g : members) {
    bool ok = std::all_of(rep.flag_subspaces.begin(), rep.flag_subspaces.end(),
                          [&](const Subspace& V) { return V.invariant_under(g); });
    rep.members.emplace_back(g, ok);
  }
  rep.notes.push_back("upper bound over a finite sample; the true intersection can be smaller");
  return rep;
}

// ---------------------------------------------------------------------------

RepReport classify_rep(const RepPresentation& pres, const GroupPoint& images,
                       unsigned long long seed) {
  if (images.kind() != Kind::GroupTuple)
    fail(Errc::BadValue, "representation images must form a group tuple");
  if (pres.n_generators == 0) fail(Errc::BadValue, "presentation needs at least one generator");
  if (images.count() != pres.n_generators)
    fail(Errc::SizeMismatch, "image count does not match generator count");

  size_t n = images.n();
  Field f = images.field();
  std::vector<Matrix> inverses;
  inverses.reserve(images.count());
  for (const auto& g : images.mats()) inverses.push_back(inverse(g));

  for (size_t ri = 0; ri < pres.relators.size(); ++ri) {
    Matrix acc = Matrix::identity(n, f);
    for (int letter : pres.relators[ri]) {
      size_t idx = static_cast<size_t>(letter > 0 ? letter : -letter);
      if (letter == 0 || idx > pres.n_generators)
        fail(Errc::BadValue, "relator letter out of range",
             "relators[" + std::to_string(ri) + "]");
      acc = acc * (letter > 0 ? images.mat(idx - 1) : inverses[idx - 1]);
    }
    if (!acc.is_identity())
      fail(Errc::RelatorViolation,
           "images do not satisfy relator " + std::to_string(ri),
           "relators[" + std::to_string(ri) + "]");
  }

  RepReport rep;
  rep.classification = classify(images, seed);
  rep.reductive = rep.classification.polystable;
  rep.irreducible = rep.classification.stable;
  rep.good = rep.classification.isotropic;
  rep.notes.push_back("good means reductive with scalar centralizer; it names the equicentral "
                      "class exactly when the representation variety is central");
  return rep;
}

}  // namespace pstab
