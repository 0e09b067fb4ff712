#include "pstab/cochar.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pstab {

Cochar::Cochar(std::vector<long long> weights, Matrix conjugator)
    : weights_(std::move(weights)), h_(std::move(conjugator)) {
  if (weights_.empty()) fail(Errc::BadValue, "empty weight vector");
  if (h_.n() != weights_.size()) fail(Errc::SizeMismatch, "conjugator size does not match weights");
  h_inv_ = inverse(h_);  // SingularMatrix if h is not invertible
}

Cochar Cochar::diagonal(std::vector<long long> weights, size_t n, Field f) {
  if (weights.size() != n) fail(Errc::SizeMismatch, "weight count != n");
  return Cochar(std::move(weights), Matrix::identity(n, f));
}

Cochar Cochar::trivial(size_t n, Field f) {
  return Cochar(std::vector<long long>(n, 0), Matrix::identity(n, f));
}

bool Cochar::is_trivial() const {
  return std::all_of(weights_.begin(), weights_.end(), [](long long w) { return w == 0; });
}

bool Cochar::is_central() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](long long w) { return w == weights_.front(); });
}

long long Cochar::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

Cochar Cochar::opposite() const {
  std::vector<long long> w = weights_;
  for (auto& k : w) k = -k;
  return Cochar(std::move(w), h_);
}

std::optional<Matrix> limit_conj(const Cochar& lambda, const Matrix& g) {
  size_t n = g.n();
  if (n != lambda.n()) fail(Errc::SizeMismatch, "cochar/matrix size mismatch");
  if (g.field() != lambda.field()) fail(Errc::FieldMismatch, "cochar/matrix field mismatch");
  Matrix gp = lambda.conjugator_inv() * g * lambda.conjugator();
  const auto& w = lambda.weights();
  Matrix diag_part(n, n, g.field());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (w[i] < w[j]) {
        if (!gp.at(i, j).is_zero()) return std::nullopt;  // entry scales as t^{w_i - w_j} < 0
      } else if (w[i] == w[j]) {
        diag_part.at(i, j) = gp.at(i, j);
      }
    }
  return lambda.conjugator() * diag_part * lambda.conjugator_inv();
}

std::optional<GroupPoint> limit_tuple(const Cochar& lambda, const GroupPoint& x) {
  if (lambda.n() != x.n()) fail(Errc::SizeMismatch, "cochar/tuple size mismatch");
  if (x.group() == Group::SL && lambda.weight_sum() != 0)
    fail(Errc::BadValue, "SL cochar weights must sum to zero");
  std::vector<Matrix> limits;
  limits.reserve(x.count());
  for (const auto& m : x.mats()) {
    auto lim = limit_conj(lambda, m);
    if (!lim) return std::nullopt;
    limits.push_back(std::move(*lim));
  }
  return GroupPoint(x.group(), x.kind(), std::move(limits));
}

bool in_parabolic(const Cochar& lambda, const Matrix& g) { return limit_conj(lambda, g).has_value(); }

bool in_levi(const Cochar& lambda, const Matrix& g) {
  auto lim = limit_conj(lambda, g);
  return lim && *lim == g;
}

bool in_unipotent_radical(const Cochar& lambda, const Matrix& g) {
  auto lim = limit_conj(lambda, g);
  return lim && lim->is_identity();
}

Matrix WeightDecomp::reconstruct() const {
  if (parts.empty()) fail(Errc::BadValue, "empty decomposition");
  Matrix sum = Matrix::zero(parts.front().component.n(), parts.front().component.field());
  for (const auto& p : parts) sum = sum + p.component;
  return sum;
}

WeightDecomp weight_decomp(const Cochar& lambda, const Matrix& v) {
  size_t n = v.n();
  if (n != lambda.n()) fail(Errc::SizeMismatch, "cochar/matrix size mismatch");
  Matrix vp = lambda.conjugator_inv() * v * lambda.conjugator();
  const auto& w = lambda.weights();
  std::map<long long, Matrix> buckets;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (vp.at(i, j).is_zero()) continue;
      long long weight = w[i] - w[j];
      auto [it, fresh] = buckets.try_emplace(weight, Matrix::zero(n, v.field()));
      it->second.at(i, j) = vp.at(i, j);
    }
  WeightDecomp out;
  for (auto& [weight, comp] : buckets)
    out.parts.push_back({weight, lambda.conjugator() * comp * lambda.conjugator_inv()});
  return out;
}

long long mu(const Cochar& lambda, const Matrix& v) {
  if (v.is_zero()) fail(Errc::ZeroMatrix, "mu is undefined at v = 0");
  return weight_decomp(lambda, v).parts.front().weight;
}

Cochar flag_to_cochar(const Flag& flag, Group group) {
  size_t n = flag.ambient();
  Field f = flag.field();
  // Greedy flag-adapted basis: rows of each step that extend the previous
  // span, then standard vectors. The adapted vectors become the *columns*
  // of the conjugator so that flag-preserving matrices turn block upper
  // triangular in decreasing-weight order.
  SpanBuilder span(n, f);
  std::vector<std::vector<Scalar>> adapted;
  std::vector<size_t> step_sizes;
  for (const auto& step : flag.steps()) {
    size_t before = adapted.size();
    for (size_t i = 0; i < step.basis().rows(); ++i) {
      auto row = step.basis().row(i);
      if (span.add(row)) adapted.push_back(row);
    }
    require_internal(adapted.size() == step.dim(), "flag step dimension bookkeeping");
    step_sizes.push_back(adapted.size() - before);
  }
  size_t before = adapted.size();
  for (size_t j = 0; j < n && adapted.size() < n; ++j) {
    std::vector<Scalar> e(n, Scalar::zero(f));
    e[j] = Scalar::one(f);
    if (span.add(e)) adapted.push_back(e);
  }
  step_sizes.push_back(adapted.size() - before);
  require_internal(adapted.size() == n, "flag completion reached full dimension");

  Matrix h(n, n, f);
  for (size_t col = 0; col < n; ++col)
    for (size_t row = 0; row < n; ++row) h.at(row, col) = adapted[col][row];

  std::vector<long long> weights;
  weights.reserve(n);
  long long level = static_cast<long long>(step_sizes.size()) - 1;
  for (size_t s = 0; s < step_sizes.size(); ++s, --level)
    for (size_t k = 0; k < step_sizes[s]; ++k) weights.push_back(level);

  if (group == Group::SL) {
    long long total = std::accumulate(weights.begin(), weights.end(), 0LL);
    long long nn = static_cast<long long>(n);
    for (auto& wgt : weights) wgt = nn * wgt - total;
  }
  return Cochar(std::move(weights), std::move(h));
}

std::vector<Matrix> permutation_matrices(size_t n, Field f) {
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matrix> out;
  do {
    Matrix p(n, n, f);
    for (size_t j = 0; j < n; ++j) p.at(perm[j], j) = Scalar::one(f);
    out.push_back(std::move(p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// If h is a permutation matrix (h e_j = e_{sigma(j)}), return sigma.
std::optional<std::vector<size_t>> as_permutation(const Matrix& h) {
  size_t n = h.n();
  std::vector<size_t> sigma(n, n);
  std::vector<bool> used(n, false);
  for (size_t j = 0; j < n; ++j) {
    size_t hit = n;
    for (size_t i = 0; i < n; ++i) {
      const Scalar& s = h.at(i, j);
      if (s.is_zero()) continue;
      if (!s.is_one() || hit != n) return std::nullopt;
      hit = i;
    }
    if (hit == n || used[hit]) return std::nullopt;
    used[hit] = true;
    sigma[j] = hit;
  }
  return sigma;
}

}  // namespace

std::vector<Cochar> lambda_sample(const GroupPoint& x, long long bound,
                                  const std::vector<Matrix>& conjugators) {
  if (bound < 1) fail(Errc::BadValue, "sampling bound must be >= 1");
  size_t n = x.n();
  if (n > 4) fail(Errc::Unsupported, "sampling operations are limited to n <= 4");
  Field f = x.field();

  std::vector<Matrix> pool;
  pool.push_back(Matrix::identity(n, f));
  for (const auto& h : conjugators) {
    if (h.n() != n) fail(Errc::SizeMismatch, "conjugator size mismatch");
    Matrix hh = h.field() == f ? h : (f == Field::QI ? h.lifted() : h);
    if (hh.field() != f) fail(Errc::FieldMismatch, "conjugator field mismatch");
    if (std::find(pool.begin(), pool.end(), hh) == pool.end()) pool.push_back(std::move(hh));
  }

  // (pool index, weights) -> cochar, for dedup + canonical order
  std::map<std::pair<size_t, std::vector<long long>>, Cochar> found;

  std::vector<long long> w(n, -bound);
  bool more = true;
  while (more) {
    long long sum = std::accumulate(w.begin(), w.end(), 0LL);
    bool admissible = x.group() == Group::GL || sum == 0;
    if (admissible) {
      bool central = std::all_of(w.begin(), w.end(), [&](long long k) { return k == w[0]; });
      for (size_t hi = 0; hi < pool.size(); ++hi) {
        size_t key_hi = hi;
        std::vector<long long> key_w = w;
        if (central) {
          key_hi = 0;  // scalar cochar: conjugator is irrelevant
        } else if (auto sigma = as_permutation(pool[hi]); sigma && hi != 0) {
          // fold P diag(t^w) P^{-1} = diag(t^{w'}) with w'_{sigma(j)} = w_j
          key_hi = 0;
          for (size_t j = 0; j < n; ++j) key_w[(*sigma)[j]] = w[j];
        }
        auto key = std::make_pair(key_hi, key_w);
        if (found.count(key)) continue;
        Cochar cand(key_w, pool[key_hi]);
        if (x.group() == Group::SL && cand.weight_sum() != 0) continue;
        if (limit_tuple(cand, x)) found.emplace(key, std::move(cand));
      }
    }
    // odometer over [-bound, bound]^n
    size_t pos = 0;
    for (; pos < n; ++pos) {
      if (w[pos] < bound) {
        ++w[pos];
        break;
      }
      w[pos] = -bound;
    }
    more = pos < n;
  }

  std::vector<Cochar> out;
  out.reserve(found.size());
  for (auto& [key, c] : found) out.push_back(std::move(c));
  return out;
}

}  // namespace pstab
