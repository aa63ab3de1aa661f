#ifndef BOUNCER_QBOUNCE_HPP
#define BOUNCER_QBOUNCE_HPP

#include <utility>
#include <vector>

#include "bouncer/spectrum.hpp"

// Physical application layer for gravitationally bound ultracold neutrons:
// unit scales from (m, g), transition frequencies in Hz, the one-parameter
// chi-squared fit of the boundary parameter to a measured frequency, local-g
// extraction, and mirror-penetration observables.

namespace bouncer::qbounce {

struct Constants {
  double mass = 1.67492749804e-27;  // neutron, CODATA 2018 [kg]
  double g = 9.804925;              // 2021 local value at the ILL [m/s^2]
  double hbar = 1.054571817e-34;    // [J s]
  double h = 6.62607015e-34;        // [J s]
  double eV = 1.602176634e-19;      // [J]
};

struct PhysicalScales {
  Constants constants;
  double F0 = 0.0;      // m*g [N]
  double x0 = 0.0;      // (hbar^2 / 2 m F0)^{1/3} [m]
  double E0 = 0.0;      // F0 * x0 [J]
  double E0_peV = 0.0;  // E0 / eV * 1e12
};

/// Scales derived from the constants; deterministic, no caching beyond the
/// stored fields (recomputing from (mass, g) reproduces them bit-for-bit).
PhysicalScales scales_from(const Constants& constants = Constants{});
PhysicalScales scales_from(double mass_kg, double g,
                           const Constants& base = Constants{});

/// nu_{n,k} = E0 (zeta_n - zeta_k) / h in Hz, k > n
double transition_frequency(const PhysicalScales& scales,
                            const spectrum::BoundaryParam& boundary, int n, int k);

struct Measurement {
  double nu = 0.0;     // measured transition frequency [Hz]
  double sigma = 0.0;  // 1-sigma uncertainty [Hz]
  int n = 1, k = 6;    // level pair, n < k
};

struct FitResult {
  double lambda_min = 0.0;
  double delta_lambda = 0.0;  // 1-sigma half width from Delta chi^2 = 1
  double chi2_min = 0.0;
  double lambda_lo = 0.0, lambda_hi = 0.0;  // the Delta chi^2 = 1 interval
  bool converged = false;
  double nu_model_dirichlet = 0.0;  // lambda = 0 prediction, for the report
};

/// Minimizes chi^2(lambda) = [(h nu - E0 (zeta_n - zeta_k))/(h sigma)]^2 over
/// the window [-1, 5] by golden-section bracketing plus parabolic refinement;
/// uncertainty from the Delta chi^2 = 1 rule. converged=false when no lambda
/// in the window reproduces nu within 50 sigma.
FitResult fit_lambda(const Measurement& measurement, const PhysicalScales& scales);

/// rows (n, E_n in peV) with E_n = -E0 zeta_n
std::vector<std::pair<int, double>> energies_table(
    const PhysicalScales& scales, const spectrum::BoundaryParam& boundary, int n_max);

/// Inverts E0(g) (zeta_n - zeta_k) = h nu using E0 proportional to g^{2/3}:
/// g = g_ref (nu / nu_model(g_ref))^{3/2} at fixed boundary parameter.
double extract_g(const Measurement& measurement,
                 const spectrum::BoundaryParam& boundary,
                 const PhysicalScales& reference);

struct PenetrationResult {
  int n = 1;
  double kappa0 = 0.0;  // 1/(lambda x0) [1/m]
  double p_in = 0.0;    // (lambda/2) alpha_n^2, dimensionless
};

/// Exponential-tail model of the wave function inside the mirror; requires
/// lambda > 0 and a resulting probability < 1 (the model's validity range).
PenetrationResult penetration(const spectrum::BoundaryParam& boundary, int n,
                              const PhysicalScales& scales);

}  // namespace bouncer::qbounce

#endif
