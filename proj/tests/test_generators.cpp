#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "uqc/error.hpp"
#include "uqc/generators.hpp"

using namespace uqc;
using test::I1;

namespace {

ErrorKind kind_of(const RawGeneratorSet& raw, const ValidationOptions& opt = {}) {
  try {
    validate_set(raw, opt);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("validate_set") {
  SUBCASE("U(3) example validates") {
    const auto set = validate_set(test::u3_example_raw());
    CHECK(set.generators.size() == 2);
    CHECK(set.designated().label == "X1");
  }
  SUBCASE("Hermitian generator") {
    auto raw = test::u3_example_raw();
    raw.generators[1].matrix = ComplexMatrix::from_rows({{0.0, 1.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
    CHECK(kind_of(raw) == ErrorKind::NotSkewHermitian);
    try {
      validate_set(raw);
    } catch (const Error& e) {
      CHECK(e.generator() == 1u);
    }
  }
  SUBCASE("degenerate designated spectrum") {
    auto raw = test::u3_example_raw();
    raw.generators[0].matrix = ComplexMatrix::diagonal(std::vector<Complex>{I1, I1, 2.0 * I1});
    CHECK(kind_of(raw) == ErrorKind::DegenerateSpectrum);
    ValidationOptions lenient;
    lenient.allow_degenerate = true;
    CHECK_NOTHROW(validate_set(raw, lenient));
  }
  SUBCASE("designated not diagonal") {
    auto raw = test::u3_example_raw();
    raw.general_index = 1;
    CHECK(kind_of(raw) == ErrorKind::DesignatedNotDiagonal);
    ValidationOptions relaxed;
    relaxed.require_general_direction = false;
    CHECK_NOTHROW(validate_set(raw, relaxed));
  }
  SUBCASE("trace in su mode") {
    auto raw = test::u3_example_raw();
    raw.algebra.kind = AlgebraKind::SU;
    CHECK(kind_of(raw) == ErrorKind::NotTraceless);
  }
  SUBCASE("dimension mismatch and empty set") {
    auto raw = test::u3_example_raw();
    raw.generators[1].matrix = ComplexMatrix(2);
    CHECK(kind_of(raw) == ErrorKind::InvalidInput);
    raw.generators.clear();
    CHECK(kind_of(raw) == ErrorKind::InvalidInput);
  }
  SUBCASE("general index out of range") {
    auto raw = test::u3_example_raw();
    raw.general_index = 5;
    CHECK(kind_of(raw) == ErrorKind::InvalidInput);
  }
}

TEST_CASE("check_general_direction") {
  const Algebra u3{AlgebraKind::U, 3};
  SUBCASE("sqrt 2, 3, 5") {
    const auto v = check_general_direction({{std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)}}, u3, 10);
    CHECK(v.status == IndependenceStatus::HeuristicallyIndependent);
    CHECK(v.exhaustive);
    CHECK(v.residual > 1e-9);
  }
  SUBCASE("rational phases") {
    const double pi = std::numbers::pi;
    const auto v = check_general_direction({{2 * pi / 3, 4 * pi / 3, 0.0}}, u3, 10);
    REQUIRE(v.status == IndependenceStatus::Dependent);
    REQUIRE(v.relation);
    const auto& c = *v.relation;
    const double s = c[0] + c[1] / 3.0 + c[2] * 2.0 / 3.0 + c[3] * 0.0;
    CHECK(std::abs(s) <= 1e-9);
    CHECK(v.residual <= 1e-9);
  }
  SUBCASE("one-third phase with the zero phase removed") {
    const double pi = std::numbers::pi;
    const auto v = check_general_direction({{2 * pi / 3, 1.0, std::sqrt(2.0)}}, u3, 10);
    REQUIRE(v.status == IndependenceStatus::Dependent);
    CHECK(*v.relation == std::vector<std::int64_t>{1, -3, 0, 0});
  }
  SUBCASE("phases in Q(sqrt2)") {
    const double r2 = std::sqrt(2.0);
    const auto v = check_general_direction({{r2, r2 + 1, 1 - 2 * r2}}, u3, 10);
    REQUIRE(v.status == IndependenceStatus::Dependent);
    CHECK(*v.relation == std::vector<std::int64_t>{0, 3, -1, 1});
  }
  SUBCASE("su mode ignores the last phase") {
    // theta_3 = -(theta_1 + theta_2) is forced by tracelessness and is not tested.
    const Algebra su3{AlgebraKind::SU, 3};
    const double a = std::sqrt(2.0), b = std::sqrt(3.0);
    CHECK(check_general_direction({{a, b, -a - b}}, su3, 20).status == IndependenceStatus::HeuristicallyIndependent);
    CHECK(check_general_direction({{a, b, -a - b}}, u3, 20).status == IndependenceStatus::Dependent);
  }
}

TEST_CASE("make_general_direction") {
  SUBCASE("U(3)") {
    const auto g = make_general_direction({AlgebraKind::U, 3});
    const auto& m = g.matrix.matrix();
    CHECK(m(0, 0) == I1 * std::sqrt(2.0));
    CHECK(m(1, 1) == I1 * std::sqrt(3.0));
    CHECK(m(2, 2) == I1 * std::sqrt(5.0));
    CHECK(m(0, 1) == Complex{});
  }
  SUBCASE("SU(2)") {
    const auto g = make_general_direction({AlgebraKind::SU, 2});
    const auto& m = g.matrix.matrix();
    CHECK(m(0, 0) == I1 * std::sqrt(2.0));
    CHECK(m(1, 1) == -I1 * std::sqrt(2.0));
  }
  SUBCASE("SU(3) has no relation of height <= 20") {
    const Algebra su3{AlgebraKind::SU, 3};
    const auto g = make_general_direction(su3);
    const auto& m = g.matrix.matrix();
    CHECK(m(2, 2).imag() == doctest::Approx(-std::sqrt(2.0) - std::sqrt(3.0)));
    CHECK(std::abs(m.trace()) < 1e-15);
    CHECK(check_general_direction(phases_of(m), su3, 20).status == IndependenceStatus::HeuristicallyIndependent);
  }
  SUBCASE("U mode trace is nonzero") {
    for (std::size_t d = 1; d <= 12; ++d) {
      CHECK(make_general_direction({AlgebraKind::U, d}).matrix.matrix().trace().imag() > 0.0);
    }
  }
  SUBCASE("recognition") {
    const Algebra u4{AlgebraKind::U, 4};
    CHECK(is_constructed_general_direction(make_general_direction(u4).matrix.matrix(), u4));
    CHECK_FALSE(is_constructed_general_direction(make_general_direction(u4).matrix.matrix(), {AlgebraKind::SU, 4}));
    CHECK_FALSE(is_constructed_general_direction(2.0 * make_general_direction(u4).matrix.matrix(), u4));
  }
  SUBCASE("first primes") { CHECK(first_primes(8) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}); }
}

TEST_CASE("constructed directions pass the heuristic check") {
  // Pigeonhole limits the certifiable range at tau_rel = 1e-9: once
  // (2H+1)^n outnumbers the ~1e9 residual slots, near-relations of height H
  // exist for any real input. The sizes below stay clear of that.
  for (std::size_t d = 1; d <= 6; ++d) {
    for (auto kind : {AlgebraKind::U, AlgebraKind::SU}) {
      const Algebra alg{kind, d};
      const int bound = d <= 4 ? 20 : 10;
      CAPTURE(d);
      const auto v = check_general_direction(phases_of(make_general_direction(alg).matrix.matrix()), alg, bound, 1e-9);
      CHECK(v.status == IndependenceStatus::HeuristicallyIndependent);
    }
  }
}

TEST_CASE("epsilon_bound") {
  const Algebra u3{AlgebraKind::U, 3};
  SUBCASE("diagonal generator") {
    RawGeneratorSet raw{u3, {{"X1", test::u3_example_raw().generators[0].matrix}}, 0};
    const auto set = validate_set(raw);
    const double eps = epsilon_bound(set);
    CHECK(eps == doctest::Approx(std::numbers::pi / (2 * std::sqrt(5.0))).epsilon(1e-12));
    const auto u = matrix_exp(set.generators[0].matrix, eps * 0.999999);
    CHECK(operator_norm(u - ComplexMatrix::identity(3)) < std::numbers::sqrt2);
  }
  SUBCASE("rotation generator sits on the boundary at pi/2") {
    ValidationOptions relaxed;
    relaxed.require_general_direction = false;
    const auto x = test::elementary(2, 0, 1) - test::elementary(2, 1, 0);
    const auto set = validate_set({{AlgebraKind::U, 2}, {{"X", x}}, 0}, relaxed);
    CHECK(epsilon_bound(set) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    const auto at = matrix_exp(set.generators[0].matrix, std::numbers::pi / 2);
    CHECK(operator_norm(at - ComplexMatrix::identity(2)) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    const auto below = matrix_exp(set.generators[0].matrix, 0.99 * std::numbers::pi / 2);
    CHECK(operator_norm(below - ComplexMatrix::identity(2)) < std::numbers::sqrt2);
  }
  SUBCASE("zero generators are excluded") {
    ValidationOptions relaxed;
    relaxed.require_general_direction = false;
    const auto x = test::elementary(2, 0, 1) - test::elementary(2, 1, 0);
    const auto set = validate_set({{AlgebraKind::U, 2}, {{"Z", ComplexMatrix(2)}, {"X", x}}, 0}, relaxed);
    CHECK(epsilon_bound(set) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(std::isinf(epsilon_bounds(set)[0]));
    const auto zero = validate_set({{AlgebraKind::U, 2}, {{"Z", ComplexMatrix(2)}}, 0}, relaxed);
    CHECK_THROWS_AS(epsilon_bound(zero), Error);
  }
  SUBCASE("scaling") {
    std::mt19937_64 rng(8);
    ValidationOptions relaxed;
    relaxed.require_general_direction = false;
    for (int t = 0; t < 20; ++t) {
      const auto x = test::random_skew_hermitian(4, rng);
      const double c = 0.1 + 0.7 * t;
      const auto s1 = validate_set({{AlgebraKind::U, 4}, {{"X", x}}, 0}, relaxed);
      const auto s2 = validate_set({{AlgebraKind::U, 4}, {{"cX", Complex(c) * x}}, 0}, relaxed);
      CHECK(epsilon_bound(s2) == doctest::Approx(epsilon_bound(s1) / c).epsilon(1e-10));
    }
  }
  SUBCASE("0.99 eps_max stays below sqrt 2") {
    std::mt19937_64 rng(12);
    ValidationOptions relaxed;
    relaxed.require_general_direction = false;
    for (int t = 0; t < 20; ++t) {
      const std::size_t d = 2 + t % 5;
      const auto set = validate_set({{AlgebraKind::U, d}, {{"X", test::random_skew_hermitian(d, rng, 3.0)}}, 0}, relaxed);
      const auto u = matrix_exp(set.generators[0].matrix, 0.99 * epsilon_bound(set));
      CHECK(operator_norm(u - ComplexMatrix::identity(d)) < std::numbers::sqrt2);
    }
  }
}
