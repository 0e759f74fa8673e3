#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "uqc/integer_relation.hpp"

using namespace uqc;

namespace {

long double residual_of(const std::vector<std::int64_t>& c, const std::vector<long double>& x) {
  long double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return std::fabs(s);
}

}  // namespace

TEST_CASE("exhaustive feasibility follows (2H+1)^n <= 1e6") {
  CHECK(exhaustive_search_feasible(4, 10));   // 194481
  CHECK_FALSE(exhaustive_search_feasible(5, 10));
  CHECK(exhaustive_search_feasible(3, 20));   // 68921
  CHECK_FALSE(exhaustive_search_feasible(4, 20));
  CHECK(exhaustive_search_feasible(1, 1000));
}

TEST_CASE("sqrt2-based phases carry a height-3 relation") {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double r2 = std::sqrt(2.0L);
  const std::vector<long double> x{1.0L, r2 / two_pi, (r2 + 1) / two_pi, (1 - 2 * r2) / two_pi};

  // Independent brute force over |c| <= 5, keeping the lowest-height relation.
  std::vector<std::int64_t> best;
  std::int64_t best_h = 99;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c)
        for (int e = -5; e <= 5; ++e) {
          if (!a && !b && !c && !e) continue;
          const std::vector<std::int64_t> v{a, b, c, e};
          if (residual_of(v, x) > 1e-12L) continue;
          const std::int64_t h = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(e)});
          if (h < best_h) best_h = h, best = v;
        }
  REQUIRE(best_h == 3);
  // frozen: 3 sqrt2 - (sqrt2 + 1) + (1 - 2 sqrt2) = 0
  const std::vector<std::int64_t> expected{0, 3, -1, 1};

  const auto ex = exhaustive_relation_search(x, 5, 1e-9);
  REQUIRE(ex.relation);
  CHECK(ex.relation->coefficients == expected);
  CHECK(ex.relation->residual <= 1e-12);

  const auto ll = lattice_relation_search(x, 5, 1e-9);
  REQUIRE(ll.relation);
  CHECK(ll.relation->coefficients == expected);
}

TEST_CASE("no relation among 1 and square roots of primes") {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const std::vector<long double> x{1.0L, std::sqrt(2.0L) / two_pi, std::sqrt(3.0L) / two_pi, std::sqrt(5.0L) / two_pi};
  const auto ex = exhaustive_relation_search(x, 10, 1e-9);
  CHECK_FALSE(ex.relation);
  CHECK(ex.best_residual > 1e-9);
  CHECK_FALSE(lattice_relation_search(x, 10, 1e-9).relation);
}

TEST_CASE("planted relations are recovered by both searches") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + t % 3;
    std::vector<long double> x(n);
    std::vector<std::int64_t> c(n);
    long double partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      x[i] = u(rng);
      c[i] = coef(rng);
      partial += c[i] * x[i];
    }
    c[n - 1] = 2;
    x[n - 1] = -partial / 2;
    CAPTURE(t);
    for (const auto& found : {exhaustive_relation_search(x, 4, 1e-9), lattice_relation_search(x, 4, 1e-9)}) {
      REQUIRE(found.relation);
      CHECK(residual_of(found.relation->coefficients, x) <= 1e-9L);
      std::int64_t h = 0;
      for (auto v : found.relation->coefficients) h = std::max<std::int64_t>(h, std::abs(v));
      CHECK(h <= 4);
    }
  }
}

TEST_CASE("relations are sign-normalized") {
  const std::vector<long double> x{1.0L, -0.5L};
  const auto r = exhaustive_relation_search(x, 3, 1e-12);
  REQUIRE(r.relation);
  CHECK(r.relation->coefficients == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("argument checks") {
  const std::vector<long double> empty;
  CHECK_THROWS(find_integer_relation(empty, 3, 1e-9));
  const std::vector<long double> x{1.0L};
  CHECK_THROWS(find_integer_relation(x, 0, 1e-9));
  CHECK_FALSE(find_integer_relation(x, 5, 1e-9).relation);
}
