#ifndef BOUNCER_RULES_HPP
#define BOUNCER_RULES_HPP

#include "bouncer/spectrum.hpp"

// Sum rules over the Robin-boundary basis, the stationary-state
// anticommutator identity, and the boundary-dependent uncertainty bound.
// Everything is reported in the dimensionless units listed per kind below.

namespace bouncer::rules {

enum class SumRuleKind { closure, trk, monopole, second_moment, bethe };

/// Units of lhs/rhs per kind:
///   closure       x0^2        sum_m <n|xi|m>^2            = <n|xi^2|n>
///   trk           hbar^2/2m   sum_m (z_n - z_m) <xi>^2    = 1
///   monopole      E0 x0^4     sum_m (z_n - z_m) <xi^2>^2  = 4 <n|xi^2|n>
///   second_moment E0^2 x0^2   sum_m (z_n - z_m)^2 <xi>^2  = (4/3)(psi0 dpsi0 - z_n)
///   bethe         hbar^2/2m   (element-free)              = (q x0)^2
struct SumRuleReport {
  SumRuleKind kind;
  int n = 1;
  double lambda = 0.0;  // +inf encodes the Neumann marker in reports
  int m_max = 0;
  double lhs_partial = 0.0;
  double rhs_closed = 0.0;
  double tail_estimate = 0.0;
  double tolerance = 0.0;  // declared per kind
  bool converged = false;  // |lhs + tail - rhs| <= tolerance * max(1, |rhs|)
};

/// Partial sums run over the full returned basis (including the extra
/// lambda < 0 state). For bethe, `wavenumber_x0` is the dimensionless q*x0 of
/// the probe e^{iqx}; the rule is element-free and exact.
SumRuleReport sum_rule(SumRuleKind kind, const spectrum::BoundaryParam& boundary,
                       int n, int m_max, double wavenumber_x0 = 1.0);

/// Truncated sum_k [<n|x|k><k|p|n> + <n|p|k><k|x|n>] in units of hbar.
/// The sum is purely imaginary; the imaginary part is returned and tends to
/// zero, which is the stationary-state statement d<x^2>/dt = 0.
double anticommutator_residual(const spectrum::BoundaryParam& boundary, int n,
                               int m_max);

/// (1/6)|3 - alpha^2 (alpha alpha' + 2 zeta)| in units of hbar: the
/// boundary-dependent lower bound written with the diagonal momentum taken in
/// the adjoint-side convention (the one the closed element formulas use).
/// Equals 1/2 at lambda = 0.
double uncertainty_bound(const spectrum::BoundaryParam& boundary, int n);

/// Same covariance bound with the diagonal momentum from the plain integral
/// convention, (1/6)|3 + alpha^2 (alpha alpha' + 2 zeta)|. This is the
/// orientation the Cauchy-Schwarz derivation guarantees against the
/// adjoint-aware variances; variances() self-checks against it.
double uncertainty_bound_integral_convention(const spectrum::BoundaryParam& boundary,
                                             int n);

struct Variances {
  double delta_x = 0.0;  // units x0
  double delta_p = 0.0;  // units hbar/x0, adjoint-aware: <p+ p> - |<p>|^2
  double product = 0.0;  // units hbar
  double bound = 0.0;    // uncertainty_bound value
};

/// Delta x from the <xi^2>, <xi> closed forms; Delta p from
/// <p+ p> = hbar^2 int |psi'|^2 via its closed form -(1/3)(zeta + 2 psi0 dpsi0)
/// (validated against quadrature in the test suite).
Variances variances(const spectrum::BoundaryParam& boundary, int n);

}  // namespace bouncer::rules

#endif
