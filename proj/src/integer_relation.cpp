#include "uqc/integer_relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uqc/error.hpp"

namespace uqc {

namespace {

std::int64_t max_norm(std::span<const std::int64_t> c) {
  std::int64_t m = 0;
  for (auto v : c) m = std::max<std::int64_t>(m, v < 0 ? -v : v);
  return m;
}

void canonical_sign(std::vector<std::int64_t>& c) {
  for (auto v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    return;
  }
}

// Keeps the preferred relation: smaller height first, then smaller residual.
void offer(std::optional<IntegerRelation>& best, std::vector<std::int64_t> c, double residual) {
  canonical_sign(c);
  if (!best) {
    best = IntegerRelation{std::move(c), residual};
    return;
  }
  const auto h_new = max_norm(c);
  const auto h_old = max_norm(best->coefficients);
  if (h_new < h_old || (h_new == h_old && residual < best->residual)) {
    best = IntegerRelation{std::move(c), residual};
  }
}

void check_args(std::span<const long double> x, int bound, double tau) {
  if (x.empty()) throw Error(ErrorKind::InvalidInput, "integer relation search needs at least one value");
  if (bound < 1) throw Error(ErrorKind::InvalidInput, "relation bound must be >= 1");
  if (!(tau >= 0.0)) throw Error(ErrorKind::InvalidInput, "relation tolerance must be nonnegative");
}

}  // namespace

bool exhaustive_search_feasible(std::size_t n, int bound) {
  double count = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    count *= 2.0 * bound + 1.0;
    if (count > 1e6) return false;
  }
  return true;
}

RelationSearch exhaustive_relation_search(std::span<const long double> x, int bound, double tau) {
  check_args(x, bound, tau);
  const std::size_t n = x.size();
  RelationSearch out;
  out.method = RelationMethod::Exhaustive;
  out.best_residual = std::numeric_limits<double>::infinity();

  // Odometer over [-bound, bound]^n with a running sum.
  std::vector<std::int64_t> c(n, -bound);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < n; ++i) sum += static_cast<long double>(c[i]) * x[i];

  while (true) {
    // Visit only one of {c, -c}: the first nonzero coefficient must be positive.
    std::size_t first = 0;
    while (first < n && c[first] == 0) ++first;
    if (first < n && c[first] > 0) {
      const double r = static_cast<double>(std::fabs(sum));
      out.best_residual = std::min(out.best_residual, r);
      if (r <= tau) offer(out.relation, c, r);
    }

    std::size_t i = 0;
    while (i < n && c[i] == bound) {
      c[i] = -bound;
      sum -= 2.0L * bound * x[i];
      ++i;
    }
    if (i == n) break;
    ++c[i];
    sum += x[i];
  }
  if (out.relation) out.best_residual = out.relation->residual;
  return out;
}

RelationSearch lattice_relation_search(std::span<const long double> x, int bound, double tau) {
  check_args(x, bound, tau);
  const std::size_t n = x.size();
  const std::size_t cols = n + 1;
  const long double weight = tau > 0.0 ? 1.0L / tau : 1e15L;

  std::vector<std::vector<long double>> b(n, std::vector<long double>(cols, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    b[i][i] = 1.0L;
    b[i][n] = weight * x[i];
  }

  auto dot = [&](const std::vector<long double>& u, const std::vector<long double>& v) {
    long double s = 0.0L;
    for (std::size_t j = 0; j < cols; ++j) s += u[j] * v[j];
    return s;
  };

  // Gram-Schmidt data: mu[i][j] for j < i, bsq[i] = |b*_i|^2.
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0.0L));
  std::vector<long double> bsq(n, 0.0L);
  {
    std::vector<std::vector<long double>> bstar = b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = bsq[j] > 0.0L ? dot(b[i], bstar[j]) / bsq[j] : 0.0L;
        for (std::size_t k = 0; k < cols; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
      }
      bsq[i] = dot(bstar[i], bstar[i]);
    }
  }

  auto size_reduce = [&](std::size_t k, std::size_t l) {
    const long double q = std::nearbyint(mu[k][l]);
    if (q == 0.0L) return;
    for (std::size_t j = 0; j < cols; ++j) b[k][j] -= q * b[l][j];
    for (std::size_t j = 0; j < l; ++j) mu[k][j] -= q * mu[l][j];
    mu[k][l] -= q;
  };

  constexpr long double delta = 0.99L;
  std::size_t k = 1;
  std::size_t iterations = 0;
  const std::size_t max_iterations = 200000 + 2000 * n * n;
  while (k < n && iterations++ < max_iterations) {
    size_reduce(k, k - 1);
    const long double m = mu[k][k - 1];
    if (bsq[k] < (delta - m * m) * bsq[k - 1]) {
      std::swap(b[k], b[k - 1]);
      const long double bnew = bsq[k] + m * m * bsq[k - 1];
      if (bnew <= 0.0L) break;
      mu[k][k - 1] = m * bsq[k - 1] / bnew;
      bsq[k] = bsq[k - 1] * bsq[k] / bnew;
      bsq[k - 1] = bnew;
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k - 1][j], mu[k][j]);
      for (std::size_t i = k + 1; i < n; ++i) {
        const long double t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      k = std::max<std::size_t>(1, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
    }
  }

  RelationSearch out;
  out.method = RelationMethod::LatticeReduction;
  out.best_residual = std::numeric_limits<double>::infinity();
  double fallback = std::numeric_limits<double>::infinity();
  for (const auto& row : b) {
    std::vector<std::int64_t> c(n);
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::int64_t>(std::llround(row[i]));
      zero = zero && c[i] == 0;
    }
    if (zero) continue;
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long double>(c[i]) * x[i];
    const double r = static_cast<double>(std::fabs(s));
    fallback = std::min(fallback, r);
    if (max_norm(c) > bound) continue;
    out.best_residual = std::min(out.best_residual, r);
    if (r <= tau) offer(out.relation, std::move(c), r);
  }
  if (out.relation) {
    out.best_residual = out.relation->residual;
  } else if (!std::isfinite(out.best_residual)) {
    out.best_residual = fallback;
  }
  return out;
}

RelationSearch find_integer_relation(std::span<const long double> x, int bound, double tau) {
  if (exhaustive_search_feasible(x.size(), bound)) return exhaustive_relation_search(x, bound, tau);
  return lattice_relation_search(x, bound, tau);
}

}  // namespace uqc
