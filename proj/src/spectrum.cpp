#include "bouncer/spectrum.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "bouncer/airy.hpp"

namespace bouncer::spectrum {

namespace {

double boundary_residual(double lambda, double x) {
  airy::AiryPair p = airy::airy(x);
  return p.value - lambda * p.derivative;
}

// Bracketed Newton on h(x) = Ai(x) - lambda Ai'(x). The bracket must carry a
// sign change; bisection steps keep Newton inside it.
double refine_root(double lambda, double lo, double hi) {
  double flo = boundary_residual(lambda, lo);
  double fhi = boundary_residual(lambda, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw RootError("no sign change on bracket", lo, hi);

  for (int i = 0; i < 30; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = boundary_residual(lambda, mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 60; ++i) {
    airy::AiryPair p = airy::airy(x);
    double h = p.value - lambda * p.derivative;
    if (h == 0.0) return x;
    if (flo * h < 0.0)
      hi = x;
    else
      lo = x;
    // h' = Ai' - lambda Ai'' = Ai' - lambda x Ai
    double hp = p.derivative - lambda * x * p.value;
    double xn = (hp != 0.0) ? x - h / hp : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::fabs(xn - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(x)) return xn;
    x = xn;
  }
  if (hi - lo > 1e-12 * std::max(1.0, std::fabs(lo)))
    throw RootError("root iteration did not converge", lo, hi);
  return 0.5 * (lo + hi);
}

// x > 0 root of Ai(x) = lambda Ai'(x), present for lambda in (1/g0, 0) with
// g0 = Ai'(0)/Ai(0). Solved through the scaled ratio so deep-forbidden-region
// underflow cannot bite.
double solve_positive_root(double lambda) {
  auto ratio_res = [&](double x) {
    airy::AiryPair s = airy::airy_scaled(x);
    return s.value / s.derivative - lambda;  // Ai/Ai' is scale-invariant
  };
  double lo = 0.0, hi = 1.0;
  double flo = ratio_res(lo);
  while (ratio_res(hi) * flo > 0.0) {
    hi *= 2.0;
    if (hi > 1e9) throw RootError("positive-branch bracketing failed", lo, hi);
  }
  // plain bisection; the ratio is monotone here
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(mid)))
      return mid;
    if (ratio_res(mid) * flo <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

EigenState make_state(const BoundaryParam& boundary, int n, double zeta) {
  EigenState s;
  s.n = n;
  s.boundary = boundary;
  s.zeta = zeta;
  airy::AiryPair p = airy::airy(zeta);
  double d = p.derivative * p.derivative - zeta * p.value * p.value;
  s.norm_xi = 1.0 / std::sqrt(d);
  s.psi0 = s.norm_xi * p.value;
  s.dpsi0 = s.norm_xi * p.derivative;
  if (!std::isfinite(s.norm_xi) && zeta > 0.0) {
    // far-out lambda<0 boundary state: amplitudes via the ratio, which stays
    // representable after Ai itself underflows; Ai(zeta) > 0 fixes the sign
    double lambda = boundary.value();
    s.psi0 = 1.0 / std::sqrt(1.0 / (lambda * lambda) - zeta);
    s.dpsi0 = s.psi0 / lambda;
  }
  s.alpha = std::fabs(s.psi0);
  s.alpha_prime = std::fabs(s.dpsi0);
  s.negative_energy = zeta > 0.0;
  return s;
}

EigenState neumann_state(int n) {
  airy::ClassicalZero z = airy::classical_zero(airy::ZeroKind::neumann, n);
  EigenState s;
  s.n = n;
  s.boundary = BoundaryParam::neumann();
  s.zeta = z.value;
  airy::AiryPair p = airy::airy(z.value);
  s.norm_xi = 1.0 / std::sqrt(-z.value * p.value * p.value);
  s.psi0 = s.norm_xi * p.value;
  s.dpsi0 = 0.0;
  s.alpha = std::fabs(s.psi0);
  s.alpha_prime = 0.0;
  return s;
}

// limiting slope Ai'(0)/Ai(0); positive-branch root exists for
// lambda in (1/g0, 0)
const double kOriginSlope = airy::ai_prime(0.0) / airy::ai(0.0);

}  // namespace

EigenState solve_root(const BoundaryParam& boundary, int n) {
  if (n < 1) throw std::invalid_argument("solve_root: n must be >= 1");
  if (boundary.is_neumann()) return neumann_state(n);
  double lambda = boundary.value();
  if (lambda == 0.0) {
    airy::ClassicalZero z = airy::classical_zero(airy::ZeroKind::dirichlet, n);
    return make_state(boundary, n, z.value);
  }
  double an = airy::classical_zero(airy::ZeroKind::dirichlet, n).value;
  if (lambda > 0.0) {
    // exactly one root in (a_n, a'_n): h(a_n) = -lambda Ai'(a_n),
    // h(a'_n) = Ai(a'_n) carry opposite signs
    double apn = airy::classical_zero(airy::ZeroKind::neumann, n).value;
    return make_state(boundary, n, refine_root(lambda, an, apn));
  }
  // lambda < 0 tower: one root per (a'_{n+1}, a_n)
  double apn1 = airy::classical_zero(airy::ZeroKind::neumann, n + 1).value;
  return make_state(boundary, n, refine_root(lambda, apn1, an));
}

std::vector<EigenState> solve_roots(const BoundaryParam& boundary, int n_max) {
  if (n_max < 1) throw std::invalid_argument("solve_roots: n_max must be >= 1");
  std::vector<EigenState> states;
  if (!boundary.is_neumann() && boundary.value() < 0.0) {
    double lambda = boundary.value();
    double zeta0;
    if (lambda >= 1.0 / kOriginSlope) {
      zeta0 = solve_positive_root(lambda);  // below-barrier state, E < 0
    } else {
      // the extra state sits in (a'_1, 0) instead
      double ap1 = airy::classical_zero(airy::ZeroKind::neumann, 1).value;
      zeta0 = refine_root(lambda, ap1 + 1e-12, -1e-300);
    }
    states.push_back(make_state(boundary, 0, zeta0));
  }
  states.reserve(states.size() + n_max);
  for (int n = 1; n <= n_max; ++n) states.push_back(solve_root(boundary, n));
  return states;
}

double eigenfunction_value(const EigenState& state, double xi) {
  if (xi < 0.0) throw std::domain_error("eigenfunction_value: xi must be >= 0");
  if (!std::isfinite(state.norm_xi))
    throw std::runtime_error("eigenfunction_value: state amplitudes exceed double range");
  return state.norm_xi * airy::ai(xi + state.zeta);
}

double eigenfunction_derivative(const EigenState& state, double xi) {
  if (xi < 0.0) throw std::domain_error("eigenfunction_derivative: xi must be >= 0");
  if (!std::isfinite(state.norm_xi))
    throw std::runtime_error("eigenfunction_derivative: state amplitudes exceed double range");
  return state.norm_xi * airy::ai_prime(xi + state.zeta);
}

double approx_energy_dirichlet_regime(double lambda, int n, bool include_quartic) {
  double an = airy::classical_zero(airy::ZeroKind::dirichlet, n).value;
  double lam3 = lambda * lambda * lambda;
  double value = an * (1.0 + lam3 / 3.0) + lambda;
  if (include_quartic) value += 0.25 * lam3 * lambda;
  return value;
}

double approx_energy_neumann_regime(double lambda, int n) {
  double ap = airy::classical_zero(airy::ZeroKind::neumann, n).value;
  double ap3 = ap * ap * ap;
  double ap5 = ap3 * ap * ap;
  double inv = 1.0 / lambda;
  return ap + inv / ap - inv * inv / (2.0 * ap3) +
         inv * inv * inv * (2.0 * ap3 + 3.0) / (6.0 * ap5);
}

double transition_gap(const BoundaryParam& boundary, int n, int k) {
  if (n == k) throw std::invalid_argument("transition_gap: n and k must differ");
  return solve_root(boundary, n).zeta - solve_root(boundary, k).zeta;
}

double lambda_from_phase(const PhaseParams& params) {
  if (!(params.theta >= 0.0 && params.theta <= 2.0 * M_PI))
    throw std::domain_error("lambda_from_phase: theta outside [0, 2pi]");
  if (!(params.eps_eta > 0.0 && params.eps_eta <= airy::complex_radius))
    throw std::domain_error("lambda_from_phase: eps_eta outside supported disc");
  std::complex<double> ie(0.0, params.eps_eta);
  airy::ComplexAiryPair plus = airy::airy_complex(ie);
  airy::ComplexAiryPair minus = airy::airy_complex(-ie);
  std::complex<double> phase = std::exp(std::complex<double>(0.0, -params.theta));
  std::complex<double> num = plus.derivative + phase * minus.derivative;
  std::complex<double> den = plus.value + phase * minus.value;
  if (std::abs(den) < 1e-12)
    throw PhasePoleError("lambda_from_phase: boundary-value coefficient vanishes");
  std::complex<double> lam = num / den;
  if (std::fabs(lam.imag()) > 1e-10 * std::max(1.0, std::fabs(lam.real())))
    throw std::runtime_error("lambda_from_phase: imaginary residual above tolerance");
  return lam.real();
}

}  // namespace bouncer::spectrum
