#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bouncer/elements.hpp"
#include "bouncer/oracle.hpp"
#include "bouncer/spectrum.hpp"

using namespace bouncer;
using spectrum::BoundaryParam;

TEST_CASE("orthonormality rows of the power family") {
  BoundaryParam b(0.4);
  CHECK(elements::x_power_element(b, 2, 2, 0) == 1.0);
  CHECK(elements::x_power_element(b, 1, 3, 0) == 0.0);
}

TEST_CASE("Dirichlet first moments against the quadrature-frozen values") {
  BoundaryParam d(0.0);
  CHECK(elements::x_power_element(d, 1, 1, 1) ==
        doctest::Approx(1.558738273640).epsilon(1e-9));
  // sign fixed by the signed boundary slopes: positive for (1,2)
  CHECK(elements::x_power_element(d, 1, 2, 1) ==
        doctest::Approx(0.653179139523).epsilon(1e-9));
  CHECK(elements::x_power_element(d, 1, 2, 2) ==
        doctest::Approx(2.559857929846).epsilon(1e-8));
}

TEST_CASE("momentum elements and their quadrature convention") {
  BoundaryParam d(0.0);
  // the root is a double approximation, so psi0 is ~1e-16 rather than exact 0
  CHECK(std::abs(elements::p_element(d, 3, 3)) < 1e-25);

  BoundaryParam l0(0.11928);
  auto diag = elements::p_element(l0, 1, 1);
  CHECK(diag.real() == 0.0);
  CHECK(diag.imag() == doctest::Approx(-0.006896036723).epsilon(1e-8));

  auto off = elements::p_element(d, 1, 2);
  CHECK(off.real() == 0.0);
  CHECK(off.imag() == doctest::Approx(-0.571480156927).epsilon(1e-8));

  // convention fixed by the operator identity: <n|p|k> = +i int psi_k psi_n'
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> lam_d(0.0, 3.0);
  for (int t = 0; t < 8; ++t) {
    BoundaryParam b(lam_d(rng));
    auto sn = spectrum::solve_root(b, 1 + t % 3);
    auto sk = spectrum::solve_root(b, 4 - t % 2);
    double closed = elements::momentum(sn, sk).imag();
    double quad = oracle::derivative_overlap(sk, sn).value;
    CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
    // and the mirrored pair differs by the boundary delta term
    double mirrored = elements::momentum(sk, sn).imag();
    CHECK(closed + mirrored ==
          doctest::Approx(-elements::delta_at_origin(sn, sk)).epsilon(1e-10));
  }
}

TEST_CASE("momentum-squared elements") {
  BoundaryParam d(0.0);
  // diagonal equals 2 E_1 / 3 in m*E0 units: the linear-potential virial split
  CHECK(elements::p2_element(d, 1, 1) ==
        doctest::Approx(2.0 / 3.0 * 2.338107410459767).epsilon(1e-10));
  CHECK(elements::p2_element(d, 1, 2) ==
        doctest::Approx(-1.306358279046).epsilon(1e-8));
  CHECK(elements::p2_element(d, 2, 1) == elements::p2_element(d, 1, 2));
  BoundaryParam b(0.8);
  CHECK(elements::x_power_element(b, 2, 5, 2) == elements::x_power_element(b, 5, 2, 2));

  // plain-integral route: <n|p^2|k> = -2 (I1 + zeta_k I0) in m*E0 units
  auto sn = spectrum::solve_root(b, 1);
  auto sk = spectrum::solve_root(b, 3);
  double quad = -2.0 * (oracle::overlap(sn, sk, 1).value +
                        sk.zeta * oracle::overlap(sn, sk, 0).value);
  CHECK(elements::momentum_squared(sn, sk) == doctest::Approx(quad).epsilon(1e-8));
}

TEST_CASE("boundary delta elements") {
  BoundaryParam d(0.0);
  CHECK(std::fabs(elements::delta_element(d, 1, 1)) < 1e-25);
  CHECK(std::fabs(elements::delta_element(d, 1, 2)) < 1e-25);

  BoundaryParam l0(0.11928);
  CHECK(elements::delta_element(l0, 1, 1) ==
        doctest::Approx(0.013792073445).epsilon(1e-8));
  // adjacent off-diagonal is negative by the alternating boundary signs
  double d12 = elements::delta_element(l0, 1, 2);
  CHECK(d12 < 0.0);
  CHECK(d12 == doctest::Approx(-0.013628511688).epsilon(1e-8));
}

TEST_CASE("closed forms vs quadrature on random parameter tuples") {
  std::mt19937 rng(20250809);
  std::uniform_real_distribution<double> lam_d(0.0, 5.0);
  std::uniform_int_distribution<int> idx(1, 6);
  for (int t = 0; t < 20; ++t) {
    BoundaryParam b(lam_d(rng));
    auto sn = spectrum::solve_root(b, idx(rng));
    int k = idx(rng);
    auto sk = (k == sn.n) ? sn : spectrum::solve_root(b, k);
    for (int q : {1, 2}) {
      double closed = elements::xi_power(sn, sk, q);
      double quad = oracle::overlap(sn, sk, q).value;
      CHECK(std::fabs(closed - quad) <= 1e-8 * std::max(1.0, std::fabs(closed)));
    }
  }
}

TEST_CASE("upward recursion reaches the quadrature values for q up to 8") {
  for (double lam : {0.0, 0.11928, 2.0}) {
    BoundaryParam b(lam);
    auto s1 = spectrum::solve_root(b, 1);
    auto s2 = spectrum::solve_root(b, 2);
    for (int q = 3; q <= 8; ++q) {
      double diag = elements::xi_power(s1, s1, q);
      CHECK(std::fabs(diag - oracle::overlap(s1, s1, q).value) <=
            1e-7 * std::max(1.0, std::fabs(diag)));
      double off = elements::xi_power(s1, s2, q);
      CHECK(std::fabs(off - oracle::overlap(s1, s2, q).value) <=
            1e-7 * std::max(1.0, std::fabs(off)));
    }
  }
}

TEST_CASE("recursion identity residuals") {
  // closed-form-fed: q <= 3 exercises the printed closed forms themselves
  BoundaryParam half(0.5);
  CHECK(std::fabs(elements::recursion_check(half, 1, 2, 1)) < 1e-10);
  CHECK(std::fabs(elements::recursion_check(half, 2, 2, 3)) < 1e-9);
  CHECK(std::fabs(elements::recursion_check(half, 1, 2, 4)) < 1e-8);

  // quadrature-fed residuals stay below 1e-8 for q <= 6
  for (double lam : {0.0, 0.11928}) {
    BoundaryParam b(lam);
    for (int n : {1, 2, 4}) {
      for (int k : {1, 4}) {
        auto sn = spectrum::solve_root(b, n);
        auto sk = (k == n) ? sn : spectrum::solve_root(b, k);
        auto quad = [&](int m) { return oracle::overlap(sn, sk, m).value; };
        for (int q = 1; q <= 6; ++q) {
          CHECK(std::fabs(elements::recursion_residual(sn, sk, q, quad)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("negative-branch elements keep the signed forms consistent") {
  // the (-1)^{n+k} prefactor form breaks down here; the signed boundary
  // values keep closed forms equal to quadrature
  BoundaryParam b(-0.5);
  auto st = spectrum::solve_roots(b, 3);
  const auto& s1 = st[1];
  const auto& s2 = st[2];
  CHECK(std::fabs(elements::xi_power(s1, s2, 1) - oracle::overlap(s1, s2, 1).value) <
        1e-8);
  CHECK(std::fabs(elements::xi_power(s1, s1, 2) - oracle::overlap(s1, s1, 2).value) <
        1e-8);
  CHECK(s1.psi0 < 0.0);  // alternation flipped relative to the lambda > 0 branch
  CHECK(s2.psi0 > 0.0);
  CHECK(elements::delta_at_origin(s1, s2) < 0.0);
}

TEST_CASE("argument validation") {
  BoundaryParam a(0.1), b(0.2);
  auto sa = spectrum::solve_root(a, 1);
  auto sb = spectrum::solve_root(b, 2);
  CHECK_THROWS_AS(elements::xi_power(sa, sb, 1), std::invalid_argument);
  CHECK_THROWS_AS(elements::xi_power(sa, sa, -1), std::invalid_argument);
  CHECK_THROWS_AS(elements::xi_power(sa, sa, 13), std::invalid_argument);
  CHECK_THROWS_AS(elements::recursion_check(a, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("tagged element carries unit bookkeeping") {
  BoundaryParam b(0.3);
  auto e = elements::element(b, elements::Operator::x_power, 1, 1, 3);
  CHECK(e.x0_power == 3);
  CHECK(e.value.imag() == 0.0);
  auto p = elements::element(b, elements::Operator::momentum, 1, 2);
  CHECK(p.hbar_over_x0_power == 1);
  CHECK(p.value.real() == 0.0);
}
