#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bouncer/airy.hpp"
#include "bouncer/oracle.hpp"
#include "bouncer/spectrum.hpp"

// The oracle validates itself through exact statements: normalization,
// orthogonality, total-derivative identities, and agreement between two
// unrelated quadrature schemes.

using namespace bouncer;
using spectrum::BoundaryParam;

TEST_CASE("normalization and orthogonality close the overlap oracle") {
  for (double lam : {0.0, 0.11928, 1.0, 10.0}) {
    auto basis = spectrum::solve_roots(BoundaryParam(lam), 4);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        auto r = oracle::overlap(basis[i], basis[j], 0);
        CHECK(r.converged);
        CHECK(r.tail_bound < 1e-16);
        double want = (i == j) ? 1.0 : 0.0;
        CHECK(std::fabs(r.value - want) < 1e-9);
      }
    }
  }
}

TEST_CASE("total-derivative identity: int psi psi' = -psi(0)^2 / 2") {
  auto d0 = spectrum::solve_roots(BoundaryParam(0.0), 1)[0];
  CHECK(std::fabs(oracle::derivative_overlap(d0, d0).value) < 1e-10);

  auto s = spectrum::solve_roots(BoundaryParam(0.11928), 1)[0];
  double want = -0.5 * s.psi0 * s.psi0;  // = -alpha_1^2/2 = -0.0068960367
  CHECK(want == doctest::Approx(-0.006896036723).epsilon(1e-8));
  CHECK(oracle::derivative_overlap(s, s).value == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("gradient overlap reproduces the kinetic closed form at lambda = 0") {
  auto s = spectrum::solve_roots(BoundaryParam(0.0), 1)[0];
  // int psi'^2 = |a_1|/3 in the xi coordinate
  CHECK(oracle::gradient_overlap(s, s).value ==
        doctest::Approx(2.338107410459767 / 3.0).epsilon(1e-9));
}

TEST_CASE("first moment at lambda = 0 (the derivation of the frozen value)") {
  auto basis = spectrum::solve_roots(BoundaryParam(0.0), 2);
  auto r = oracle::overlap(basis[0], basis[0], 1);
  CHECK(r.value == doctest::Approx(1.558738273640).epsilon(1e-9));
  auto r12 = oracle::overlap(basis[0], basis[1], 1);
  CHECK(r12.value == doctest::Approx(0.653179139523).epsilon(1e-8));
}

TEST_CASE("adaptive and composite schemes agree to 1e-9") {
  for (double lam : {0.0, 0.7}) {
    auto basis = spectrum::solve_roots(BoundaryParam(lam), 3);
    for (int q : {0, 1, 2}) {
      auto a = oracle::overlap(basis[0], basis[2], q);
      double hi = std::fabs(basis[2].zeta) + 15.0;
      auto f = [&](double xi) {
        double v = spectrum::eigenfunction_value(basis[0], xi) *
                   spectrum::eigenfunction_value(basis[2], xi);
        return q == 0 ? v : v * std::pow(xi, q);
      };
      double b = oracle::integrate_composite(f, 0.0, hi, 200);
      CHECK(std::fabs(a.value - b) < 1e-9);
    }
  }
}

TEST_CASE("bisection oracle") {
  double a1 = oracle::bisect_zero([](double x) { return airy::ai(x); }, -3.0, -2.0);
  CHECK(a1 == doctest::Approx(-2.33810741).epsilon(1e-8));
  double ap1 =
      oracle::bisect_zero([](double x) { return airy::ai_prime(x); }, -2.0, -0.5);
  CHECK(ap1 == doctest::Approx(-1.01879297).epsilon(1e-8));
  // Robin combination at the fitted boundary parameter
  double z = oracle::bisect_zero(
      [](double x) { return airy::ai(x) - 0.11928 * airy::ai_prime(x); }, -2.4, -2.0);
  CHECK(z == doctest::Approx(-2.220076127).epsilon(1e-6));
  CHECK_THROWS_AS(
      oracle::bisect_zero([](double x) { return 1.0 + x * x; }, -1.0, 1.0),
      std::invalid_argument);
}

TEST_CASE("quadrature error metadata") {
  auto basis = spectrum::solve_roots(BoundaryParam(0.3), 2);
  auto r = oracle::overlap(basis[0], basis[1], 2);
  CHECK(r.abs_error_estimate >= 0.0);
  CHECK(r.tail_bound >= 0.0);
  CHECK(r.tail_bound < 1e-16);
  CHECK(r.subdivisions >= 1);
  CHECK_THROWS_AS(oracle::overlap(basis[0], basis[1], 9), std::invalid_argument);
}

TEST_CASE("reference series tracks the production evaluator inside |x| <= 8") {
  for (double x = -8.0; x <= 8.0; x += 0.5) {
    double ref = static_cast<double>(oracle::ai_series_reference(x));
    double refp = static_cast<double>(oracle::ai_prime_series_reference(x));
    CHECK(std::fabs(ref - airy::ai(x)) < 1e-12 * std::max(1.0, std::fabs(ref)));
    CHECK(std::fabs(refp - airy::ai_prime(x)) < 1e-12 * std::max(1.0, std::fabs(refp)));
  }
}
