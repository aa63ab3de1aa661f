#ifndef BOUNCER_ELEMENTS_HPP
#define BOUNCER_ELEMENTS_HPP

#include <complex>
#include <functional>

#include "bouncer/spectrum.hpp"

// Closed-form matrix elements between Robin-boundary eigenstates, in
// dimensionless xi units throughout. Unit restoration: <x^q> carries x0^q,
// momentum carries hbar/x0, momentum_squared carries m*E0 (= hbar^2/(2 x0^2)).
//
// All formulas are written with the signed boundary values psi0, dpsi0 rather
// than (-1)^{n+k} prefactors times magnitudes; the two agree on the lambda >= 0
// branches where the boundary signs alternate with n, and the signed form
// remains correct on the lambda < 0 branches where they do not.

namespace bouncer::elements {

using spectrum::EigenState;

enum class Operator { x_power, momentum, momentum_squared, delta_at_origin };

struct MatrixElement {
  int bra = 0, ket = 0;
  Operator op = Operator::x_power;
  int q = 1;  // power for x_power
  std::complex<double> value;
  int x0_power = 0;          // unit factor x0^p
  int hbar_over_x0_power = 0;  // unit factor (hbar/x0)^p
};

/// <a|xi^q|b>; q in {0,1,2} off-diagonal and {0,1,2} diagonal use the closed
/// forms, higher q comes from upward recursion seeded by them.
double xi_power(const EigenState& a, const EigenState& b, int q);

/// <a|p|b> in units hbar/x0. Diagonal -i alpha^2/2; the off-diagonal combines
/// the xi element with the boundary delta element. The element convention is
/// the one fixed by the operator identity p = (m/ihbar)[x,H] + (hbar/2i)delta(x);
/// against plain integrals it satisfies  <a|p|b> = +i * integral(psi_b psi_a').
std::complex<double> momentum(const EigenState& a, const EigenState& b);

/// <a|p^2|b> in units m*E0
double momentum_squared(const EigenState& a, const EigenState& b);

/// x0 * <a|delta(x)|b> = psi_a(0) psi_b(0) in xi normalization
double delta_at_origin(const EigenState& a, const EigenState& b);

/// element provider used by the recursion check; maps q -> <a|xi^q|b>
using XiElementFn = std::function<double(int q)>;

/// residual (LHS - RHS) of the four-term power recursion at order q, with all
/// xi^m elements taken from `elems` (closed forms, quadrature, ...). Negative
/// powers are skipped, as the derivation requires.
double recursion_residual(const EigenState& a, const EigenState& b, int q,
                          const XiElementFn& elems);

/// convenience wrappers on (lambda, n, k)
double x_power_element(const spectrum::BoundaryParam& boundary, int n, int k, int q);
std::complex<double> p_element(const spectrum::BoundaryParam& boundary, int n, int k);
double p2_element(const spectrum::BoundaryParam& boundary, int n, int k);
double delta_element(const spectrum::BoundaryParam& boundary, int n, int k);
double recursion_check(const spectrum::BoundaryParam& boundary, int n, int k, int q);

/// tagged element with unit bookkeeping, for reporting layers
MatrixElement element(const spectrum::BoundaryParam& boundary, Operator op, int n,
                      int k, int q = 1);

}  // namespace bouncer::elements

#endif
