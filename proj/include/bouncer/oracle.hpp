#ifndef BOUNCER_ORACLE_HPP
#define BOUNCER_ORACLE_HPP

#include <functional>

#include "bouncer/spectrum.hpp"

// Verification backend: adaptive quadrature for overlap integrals, bisection
// root-finding and a slow reference series for Ai. Used by tests and the
// `verify` command, never by the production evaluation paths.

namespace bouncer::oracle {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  double tail_bound = 0.0;  // bound on the truncated [xi_max, inf) contribution
  bool converged = true;
};

/// integral of psi_a * psi_b * xi^q over [0, inf), xi-normalized states
QuadratureResult overlap(const spectrum::EigenState& a, const spectrum::EigenState& b,
                         int q);

/// integral of psi_a * psi_b' over [0, inf)
QuadratureResult derivative_overlap(const spectrum::EigenState& a,
                                    const spectrum::EigenState& b);

/// integral of psi_a' * psi_b' over [0, inf)
QuadratureResult gradient_overlap(const spectrum::EigenState& a,
                                  const spectrum::EigenState& b);

/// adaptive Gauss-Kronrod 15-point on [lo, hi] to the given absolute target
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol = 1e-11);

/// fixed-order composite Gauss-Legendre rule; second, independent scheme used
/// to cross-check the adaptive one
double integrate_composite(const std::function<double(double)>& f, double lo,
                           double hi, int panels = 128);

/// root of f on [lo, hi] by plain bisection; requires a sign change
double bisect_zero(const std::function<double(double)>& f, double lo, double hi,
                   double tol = 1e-13);

/// Maclaurin series for Ai/Ai' in 80-bit arithmetic with Kahan summation;
/// slow spot-checker for the production evaluator, trustworthy for |x| <= 8
long double ai_series_reference(long double x);
long double ai_prime_series_reference(long double x);

}  // namespace bouncer::oracle

#endif
