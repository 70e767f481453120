#include <random>

#include "biparam/error.hpp"
#include "biparam/linalg.hpp"
#include "biparam/resolvent.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace biparam;
using biparam::testing::random_generator;
using biparam::testing::series_bruteforce;

namespace {
const GeneratorMatrix& juice() {
  static const GeneratorMatrix g = validate_generator({{-2, 2}, {0.6, -0.6}});
  return g;
}
}  // namespace

TEST_CASE("resolvent at s1 = s2 = 1 matches the displayed transform") {
  // 1/(z(5z+13)) [[5z+3, 10], [3, 5(z+2)]] at z = 1
  const auto r = resolvent_at(juice(), {1.0, 1.0});
  CHECK(std::abs(r(0, 0) - 8.0 / 18) < 1e-12);
  CHECK(std::abs(r(0, 1) - 10.0 / 18) < 1e-12);
  CHECK(std::abs(r(1, 0) - 3.0 / 18) < 1e-12);
  CHECK(std::abs(r(1, 1) - 15.0 / 18) < 1e-12);
}

TEST_CASE("resolvent matches the displayed closed form at complex points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const TransformPoint s{{0.1 + std::abs(U(rng)), U(rng)}, {0.1 + std::abs(U(rng)), U(rng)}};
    const Complex z = s.s1 * s.s2;
    const Complex d = z * (5.0 * z + 13.0);
    const auto r = resolvent_at(juice(), s);
    CHECK(std::abs(r(0, 0) - (5.0 * z + 3.0) / d) < 1e-12);
    CHECK(std::abs(r(0, 1) - 10.0 / d) < 1e-12);
    CHECK(std::abs(r(1, 0) - 3.0 / d) < 1e-12);
    CHECK(std::abs(r(1, 1) - 5.0 * (z + 2.0) / d) < 1e-12);
  }
}

TEST_CASE("resolvent of the zero generator is I / (s1 s2)") {
  const auto zero = validate_generator({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const TransformPoint s{{2.0, 1.0}, {0.5, -0.25}};
  const Complex c = s.s1 * s.s2;
  const auto r = resolvent_at(zero, s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(r(i, j) - (i == j ? 1.0 / c : 0.0)) < 1e-15);
}

TEST_CASE("resolvent at s1 s2 = 0 is singular") {
  try {
    resolvent_at(juice(), {0.0, 3.0});
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularResolvent);
  }
  // -13/5 is the other eigenvalue
  CHECK_THROWS_AS(resolvent_at(juice(), {Complex(0, std::sqrt(2.6)), Complex(0, std::sqrt(2.6))}), Error);
}

TEST_CASE("resolvent residual on random generators and points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto g = validate_generator(random_generator(rng, n, 3.0));
    const TransformPoint s{{0.05 + std::abs(U(rng)), U(rng)}, {0.05 + std::abs(U(rng)), U(rng)}};
    const auto x = resolvent_at(g, s);
    ComplexMatrix m = ComplexMatrix::identity(n) * (s.s1 * s.s2) - to_complex(g.matrix());
    const ComplexMatrix res = m * x - ComplexMatrix::identity(n);
    CHECK(max_abs(res) <= 1e-10);
  }
}

TEST_CASE("ComplexLU solves a pivoting-sensitive system") {
  ComplexMatrix m(3);
  m(0, 0) = 1e-20;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = Complex(0, 2);
  std::vector<Complex> b{1.0, 2.0, Complex(0, 4)};
  ComplexLU(m).solve_in_place(b);
  CHECK(std::abs(b[0] - 1.0) < 1e-14);
  CHECK(std::abs(b[1] - 1.0) < 1e-14);
  CHECK(std::abs(b[2] - 2.0) < 1e-14);
}

TEST_CASE("series_transition examples") {
  SUBCASE("three-term oracle at (0.1, 0.1)") {
    const double x = 0.01;
    const double oracle = 2 * x + (-5.2) * x * x / 4;
    const auto p = series_transition(juice(), {0.1, 0.1});
    CHECK(std::abs(p.p(0, 1) - 0.01987) < 1e-6);
    CHECK(std::abs(p.p(0, 1) - oracle) < 1e-6);
    CHECK(p.method == Method::Series);
    CHECK_FALSE(p.rangeWarning);
  }
  SUBCASE("axes give I exactly") {
    CHECK(series_transition(juice(), {0, 5}).p == RealMatrix::identity(2));
    CHECK(series_transition(juice(), {7, 0}).p == RealMatrix::identity(2));
  }
  SUBCASE("matches the Bessel closed form") {
    for (auto [t, u] : {std::pair{0.2, 0.6}, {2.0, 2.0}, {1.0, 3.0}}) {
      const auto ref = biparam::testing::two_state_closed_form(2.0, 0.6, t, u);
      const auto p = series_transition(juice(), {t, u});
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(p.p(i, j) - ref[i][j]) < 1e-12);
    }
  }
}

TEST_CASE("series_transition errors") {
  CHECK_THROWS_AS(series_transition(juice(), {1, 1}, 0), Error);
  CHECK_THROWS_AS(series_transition(juice(), {1, 1}, 10, 0.0), Error);
  CHECK_THROWS_AS(series_transition(juice(), {-1, 1}), Error);
  try {
    series_transition(juice(), {3, 3}, 3, 1e-12);
    FAIL("should throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MaxTermsExceeded);
  }
}

TEST_CASE("series rows sum to one on random generators") {
  // t u <= 4 with rates <= 3
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto raw = random_generator(rng, n, 3.0);
    const auto g = validate_generator(raw);
    const QueryPoint at{U(rng), U(rng)};
    const auto p = series_transition(g, at);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (double x : p.p.row(i)) s += x;
      CHECK(std::abs(s - 1.0) <= 1e-10);
    }
    const auto ref = series_bruteforce(raw, at.t * at.u);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(p.p(i, j) - ref[i][j]) < 1e-9);
  }
}

TEST_CASE("series flags range excursions for large t*u") {
  // 1 - J0 exceeds 1 past J0's first zero: 2 sqrt(2.6 x) > 2.405 and J0 < 0
  const auto p = series_transition(juice(), {4.0, 4.0});
  const auto ref = biparam::testing::two_state_closed_form(2.0, 0.6, 4.0, 4.0);
  CHECK(std::abs(p.p(0, 0) - ref[0][0]) < 1e-9);
  CHECK(p.rangeWarning == (ref[0][0] < -1e-9 || ref[0][1] > 1 + 1e-9));
}

TEST_CASE("ck_residual") {
  SolverOptions series;
  SUBCASE("zero generator") {
    const auto zero = validate_generator({{0, 0}, {0, 0}});
    CHECK(ck_residual(zero, {0.3, 1.2}, {2, 0.7}, series) <= 1e-12);
  }
  SUBCASE("juice chain at (1,1),(1,1) is strictly positive") {
    // ||P(2,2) - P(1,1)^2||_inf from the long-double series oracle
    const auto p11 = series_bruteforce({{-2, 2}, {0.6, -0.6}}, 1.0);
    const auto p22 = series_bruteforce({{-2, 2}, {0.6, -0.6}}, 4.0);
    double oracle = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      double row = 0;
      for (std::size_t j = 0; j < 2; ++j) {
        double prod = 0;
        for (std::size_t k = 0; k < 2; ++k) prod += p11[i][k] * p11[k][j];
        row += std::abs(p22[i][j] - prod);
      }
      oracle = std::max(oracle, row);
    }
    const double r = ck_residual(juice(), {1, 1}, {1, 1}, series);
    CHECK(r > 0.1);
    CHECK(std::abs(r - oracle) < 1e-12);
    CHECK(std::abs(r - 0.22364402832507757) < 1e-12);
  }
  SUBCASE("axis factors reduce to ||P - I||") {
    const double t = 0.7, u = 1.3;
    const double r = ck_residual(juice(), {t, 0}, {0, u}, series);
    const auto p = series_transition(juice(), {t, u}).p;
    CHECK(std::abs(r - norm_inf(p - RealMatrix::identity(2))) < 1e-15);
  }
  SUBCASE("other solvers agree with the series diagnostic") {
    SolverOptions lap;
    lap.method = Method::Laplace2d;
    SolverOptions pde;
    pde.method = Method::Pde;
    pde.pdeRichardson = true;
    const double ref = ck_residual(juice(), {1, 1}, {1, 1}, series);
    CHECK(std::abs(ck_residual(juice(), {1, 1}, {1, 1}, lap) - ref) < 1e-6);
    CHECK(std::abs(ck_residual(juice(), {1, 1}, {1, 1}, pde) - ref) < 1e-5);
  }
}
