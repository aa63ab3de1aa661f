#include "bouncer/qbounce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bouncer::qbounce {

PhysicalScales scales_from(const Constants& constants) {
  if (!(constants.mass > 0.0) || !(constants.g > 0.0))
    throw std::invalid_argument("scales_from: mass and g must be positive");
  PhysicalScales s;
  s.constants = constants;
  s.F0 = constants.mass * constants.g;
  s.x0 = std::cbrt(constants.hbar * constants.hbar / (2.0 * constants.mass * s.F0));
  s.E0 = s.F0 * s.x0;
  s.E0_peV = s.E0 / constants.eV * 1e12;
  return s;
}

PhysicalScales scales_from(double mass_kg, double g, const Constants& base) {
  Constants c = base;
  c.mass = mass_kg;
  c.g = g;
  return scales_from(c);
}

double transition_frequency(const PhysicalScales& scales,
                            const spectrum::BoundaryParam& boundary, int n, int k) {
  if (!(n < k)) throw std::invalid_argument("transition_frequency: needs n < k");
  return scales.E0 * spectrum::transition_gap(boundary, n, k) / scales.constants.h;
}

namespace {

void check_measurement(const Measurement& m) {
  if (!(m.sigma > 0.0)) throw std::invalid_argument("measurement: sigma must be > 0");
  if (!(m.n < m.k)) throw std::invalid_argument("measurement: needs n < k");
  if (m.n < 1) throw std::invalid_argument("measurement: n must be >= 1");
}

}  // namespace

FitResult fit_lambda(const Measurement& measurement, const PhysicalScales& scales) {
  check_measurement(measurement);
  FitResult out;
  auto chi = [&](double lam) {
    double nu = transition_frequency(scales, spectrum::BoundaryParam(lam),
                                     measurement.n, measurement.k);
    return (measurement.nu - nu) / measurement.sigma;
  };
  auto chi2 = [&](double lam) {
    double c = chi(lam);
    return c * c;
  };
  out.nu_model_dirichlet = transition_frequency(
      scales, spectrum::BoundaryParam(0.0), measurement.n, measurement.k);

  // coarse scan of the window, then golden-section on the bracketing triple
  constexpr double kLo = -1.0, kHi = 5.0;
  constexpr int kScan = 121;
  double best = kLo, best_val = chi2(kLo);
  for (int i = 1; i < kScan; ++i) {
    double lam = kLo + (kHi - kLo) * i / (kScan - 1);
    double v = chi2(lam);
    if (v < best_val) {
      best = lam;
      best_val = v;
    }
  }
  if (std::sqrt(best_val) > 50.0) {
    out.lambda_min = best;
    out.chi2_min = best_val;
    out.converged = false;
    return out;
  }
  double step = (kHi - kLo) / (kScan - 1);
  double a = std::max(kLo, best - step), b = std::min(kHi, best + step);
  constexpr double kGolden = 0.6180339887498949;
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = chi2(x1), f2 = chi2(x2);
  for (int i = 0; i < 80 && (b - a) > 1e-11; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = chi2(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = chi2(x2);
    }
  }
  // parabolic refinement through the final triple
  double xm = 0.5 * (a + b), fm = chi2(xm);
  {
    double h = 0.5 * (b - a);
    if (h > 0.0) {
      double fa = chi2(xm - h), fb = chi2(xm + h);
      double denom = fa - 2.0 * fm + fb;
      if (denom > 0.0) {
        double shift = 0.5 * h * (fa - fb) / denom;
        double cand = xm + shift;
        double fc = chi2(cand);
        if (fc < fm) {
          xm = cand;
          fm = fc;
        }
      }
    }
  }
  out.lambda_min = xm;
  out.chi2_min = fm;
  out.converged = true;

  // Delta chi^2 = 1 interval. nu(lambda) is strictly increasing (the gap
  // dilation has positive slope away from lambda = 0), so chi(lambda) is
  // monotone decreasing and each crossing is found by expanding outward from
  // the minimum and bisecting.
  double c0 = chi(xm);
  auto crossing = [&](int side) {  // side -1: chi = c0+1, side +1: chi = c0-1
    double target = c0 - side;
    double inner = xm, outer = xm;
    double w = 0.02;
    for (int i = 0; i < 60; ++i) {
      outer = std::clamp(xm + side * w, kLo, kHi + 10.0);
      if (side * (chi(outer) - target) <= 0.0) break;  // crossed the target
      w *= 2.0;
    }
    double lo = std::min(inner, outer), hi = std::max(inner, outer);
    for (int i = 0; i < 200 && (hi - lo) > 1e-12; ++i) {
      double mid = 0.5 * (lo + hi);
      if (chi(mid) - target >= 0.0)  // chi decreases: root lies to the right
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  out.lambda_lo = crossing(-1);
  out.lambda_hi = crossing(+1);
  out.delta_lambda = 0.5 * (out.lambda_hi - out.lambda_lo);
  return out;
}

std::vector<std::pair<int, double>> energies_table(
    const PhysicalScales& scales, const spectrum::BoundaryParam& boundary,
    int n_max) {
  if (n_max < 1) throw std::invalid_argument("energies_table: n_max must be >= 1");
  std::vector<std::pair<int, double>> rows;
  for (const auto& s : spectrum::solve_roots(boundary, n_max))
    rows.emplace_back(s.n, -scales.E0_peV * s.zeta);
  return rows;
}

double extract_g(const Measurement& measurement,
                 const spectrum::BoundaryParam& boundary,
                 const PhysicalScales& reference) {
  check_measurement(measurement);
  double nu_ref =
      transition_frequency(reference, boundary, measurement.n, measurement.k);
  return reference.constants.g * std::pow(measurement.nu / nu_ref, 1.5);
}

PenetrationResult penetration(const spectrum::BoundaryParam& boundary, int n,
                              const PhysicalScales& scales) {
  if (boundary.is_neumann() || !(boundary.value() > 0.0))
    throw std::domain_error("penetration: exponential-tail model needs lambda > 0");
  double lambda = boundary.value();
  spectrum::EigenState s = spectrum::solve_root(boundary, n);
  PenetrationResult out;
  out.n = n;
  out.kappa0 = 1.0 / (lambda * scales.x0);
  out.p_in = 0.5 * lambda * s.alpha * s.alpha;
  if (out.p_in >= 1.0)
    throw std::domain_error("penetration: model breaks down (probability >= 1)");
  return out;
}

}  // namespace bouncer::qbounce
