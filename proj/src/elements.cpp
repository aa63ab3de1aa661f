#include "bouncer/elements.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bouncer::elements {

namespace {

bool same_state(const EigenState& a, const EigenState& b) {
  return a.n == b.n && a.boundary == b.boundary;
}

void check_pair(const EigenState& a, const EigenState& b) {
  if (!(a.boundary == b.boundary))
    throw std::invalid_argument("elements: states belong to different boundary parameters");
}

// closed forms for the diagonal, q = power of xi
double diagonal_xi(const EigenState& s, int q) {
  double w = s.psi0 * s.dpsi0 + 2.0 * s.zeta;
  switch (q) {
    case 0:
      return 1.0;
    case 1:
      return -w / 3.0;
    case 2:
      return (s.psi0 * s.psi0 + 4.0 / 3.0 * s.zeta * w) / 5.0;
    default:
      break;
  }
  throw std::logic_error("diagonal_xi: only q <= 2 closed forms");
}

double offdiag_xi(const EigenState& a, const EigenState& b, int q) {
  double dz = a.zeta - b.zeta;
  double zav = 0.5 * (a.zeta + b.zeta);
  double dd = a.dpsi0 * b.dpsi0 - zav * a.psi0 * b.psi0;
  switch (q) {
    case 0:
      return 0.0;
    case 1:
      return -2.0 / (dz * dz) * dd;
    case 2:
      return -(24.0 / (dz * dz * dz * dz) * dd -
               2.0 / (dz * dz) * (a.dpsi0 * b.psi0 + a.psi0 * b.dpsi0));
    default:
      break;
  }
  throw std::logic_error("offdiag_xi: only q <= 2 closed forms");
}

// RHS boundary terms of the power recursion at order q, signed form
double recursion_rhs(const EigenState& a, const EigenState& b, int q) {
  double rhs = 0.0;
  if (q == 2) rhs += 2.0 * (a.dpsi0 * b.psi0 + a.psi0 * b.dpsi0);
  if (q == 1) rhs -= 2.0 * a.dpsi0 * b.dpsi0;
  double zav = 0.5 * (a.zeta + b.zeta);
  if (q == 3) rhs -= 6.0 * a.psi0 * b.psi0;
  if (q == 1) rhs += 2.0 * zav * a.psi0 * b.psi0;
  return rhs;
}

constexpr int kMaxPower = 12;

}  // namespace

double xi_power(const EigenState& a, const EigenState& b, int q) {
  check_pair(a, b);
  if (q < 0) throw std::invalid_argument("xi_power: q must be >= 0");
  if (q > kMaxPower)
    throw std::invalid_argument("xi_power: upward recursion capped at q = 12");

  bool diag = same_state(a, b);
  if (diag && q <= 2) return diagonal_xi(a, q);
  if (!diag && q <= 2) return offdiag_xi(a, b, q);

  // march upward: order-m elements from the recursion at order q = m+1
  // (diagonal) or q = m (off-diagonal); boundary terms survive only at
  // q <= 3 and matrix elements of negative powers are dropped
  std::vector<double> e(q + 1, 0.0);
  for (int m = 0; m <= 2; ++m)
    e[m] = diag ? diagonal_xi(a, m) : offdiag_xi(a, b, m);
  if (diag) {
    double zn = a.zeta;
    for (int m = 3; m <= q; ++m) {
      double qq = m + 1.0;
      double lower = (m - 3 >= 0) ? e[m - 3] : 0.0;
      double rhs = (m + 1 <= 3) ? recursion_rhs(a, a, m + 1) : 0.0;
      e[m] = (qq * (qq - 1.0) * (qq - 2.0) * (qq - 3.0) * lower -
              4.0 * qq * (qq - 1.0) * zn * e[m - 1] - rhs) /
             (2.0 * qq * (2.0 * qq - 1.0));
    }
  } else {
    double dz2 = (a.zeta - b.zeta) * (a.zeta - b.zeta);
    double zav = 0.5 * (a.zeta + b.zeta);
    for (int m = 3; m <= q; ++m) {
      double qq = m;
      double lower = (m - 4 >= 0) ? e[m - 4] : 0.0;
      double rhs = (m <= 3) ? recursion_rhs(a, b, m) : 0.0;
      e[m] = (rhs + 2.0 * qq * (2.0 * qq - 1.0) * e[m - 1] +
              4.0 * qq * (qq - 1.0) * zav * e[m - 2] -
              qq * (qq - 1.0) * (qq - 2.0) * (qq - 3.0) * lower) /
             dz2;
    }
  }
  return e[q];
}

std::complex<double> momentum(const EigenState& a, const EigenState& b) {
  check_pair(a, b);
  if (same_state(a, b)) return {0.0, -0.5 * a.psi0 * a.psi0};
  double dz = a.zeta - b.zeta;
  double value = -0.5 * (dz * xi_power(a, b, 1) + delta_at_origin(a, b));
  return {0.0, value};
}

double momentum_squared(const EigenState& a, const EigenState& b) {
  check_pair(a, b);
  if (same_state(a, b)) return -2.0 / 3.0 * (a.zeta - a.psi0 * a.dpsi0);
  double dz = a.zeta - b.zeta;
  double zav = 0.5 * (a.zeta + b.zeta);
  return 4.0 / (dz * dz) * (a.dpsi0 * b.dpsi0 - zav * a.psi0 * b.psi0);
}

double delta_at_origin(const EigenState& a, const EigenState& b) {
  check_pair(a, b);
  return a.psi0 * b.psi0;
}

double recursion_residual(const EigenState& a, const EigenState& b, int q,
                          const XiElementFn& elems) {
  check_pair(a, b);
  if (q < 1) throw std::invalid_argument("recursion_residual: q must be >= 1");
  double qq = q;
  double zav = 0.5 * (a.zeta + b.zeta);
  double dz = a.zeta - b.zeta;
  double lhs = 0.0;
  if (q >= 4) lhs += qq * (qq - 1.0) * (qq - 2.0) * (qq - 3.0) * elems(q - 4);
  if (q >= 2) lhs -= 4.0 * qq * (qq - 1.0) * zav * elems(q - 2);
  lhs -= 2.0 * qq * (2.0 * qq - 1.0) * elems(q - 1);
  if (dz != 0.0) lhs += dz * dz * elems(q);
  return lhs - recursion_rhs(a, b, q);
}

namespace {
EigenState state_of(const spectrum::BoundaryParam& boundary, int n) {
  return spectrum::solve_root(boundary, n);
}
}  // namespace

double x_power_element(const spectrum::BoundaryParam& boundary, int n, int k, int q) {
  EigenState a = state_of(boundary, n);
  EigenState b = (k == n) ? a : state_of(boundary, k);
  return xi_power(a, b, q);
}

std::complex<double> p_element(const spectrum::BoundaryParam& boundary, int n, int k) {
  EigenState a = state_of(boundary, n);
  EigenState b = (k == n) ? a : state_of(boundary, k);
  return momentum(a, b);
}

double p2_element(const spectrum::BoundaryParam& boundary, int n, int k) {
  EigenState a = state_of(boundary, n);
  EigenState b = (k == n) ? a : state_of(boundary, k);
  return momentum_squared(a, b);
}

double delta_element(const spectrum::BoundaryParam& boundary, int n, int k) {
  EigenState a = state_of(boundary, n);
  EigenState b = (k == n) ? a : state_of(boundary, k);
  return delta_at_origin(a, b);
}

double recursion_check(const spectrum::BoundaryParam& boundary, int n, int k, int q) {
  EigenState a = state_of(boundary, n);
  EigenState b = (k == n) ? a : state_of(boundary, k);
  return recursion_residual(a, b, q, [&](int m) { return xi_power(a, b, m); });
}

MatrixElement element(const spectrum::BoundaryParam& boundary, Operator op, int n,
                      int k, int q) {
  MatrixElement out;
  out.bra = n;
  out.ket = k;
  out.op = op;
  out.q = q;
  switch (op) {
    case Operator::x_power:
      out.value = x_power_element(boundary, n, k, q);
      out.x0_power = q;
      break;
    case Operator::momentum:
      out.value = p_element(boundary, n, k);
      out.hbar_over_x0_power = 1;
      break;
    case Operator::momentum_squared:
      out.value = p2_element(boundary, n, k);
      out.hbar_over_x0_power = 2;  // m*E0 = (hbar/x0)^2 / 2
      break;
    case Operator::delta_at_origin:
      out.value = delta_element(boundary, n, k);
      out.x0_power = -1;  // <delta(x)> itself carries 1/x0
      break;
  }
  return out;
}

}  // namespace bouncer::elements
