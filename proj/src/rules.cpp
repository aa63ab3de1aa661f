#include "bouncer/rules.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bouncer/elements.hpp"

namespace bouncer::rules {

namespace {

double lambda_for_report(const spectrum::BoundaryParam& b) {
  return b.is_neumann() ? std::numeric_limits<double>::infinity() : b.value();
}

double declared_tolerance(SumRuleKind kind) {
  switch (kind) {
    case SumRuleKind::closure:
      return 1e-6;
    case SumRuleKind::trk:
      return 1e-3;
    case SumRuleKind::monopole:
      return 1e-3;
    case SumRuleKind::second_moment:
      return 1e-2;  // slow m^{-1/3} tail, estimate-corrected
    case SumRuleKind::bethe:
      return 0.0;
  }
  return 0.0;
}

// Richardson-style tail for terms decaying like a power of the level index.
// The local exponent is fit on a geometric stencil (m/2 vs m); the adjacent
// -term fit is unstable against the slow alpha'_m modulation at lambda != 0.
double power_tail(const std::vector<double>& terms, int first_tail_index) {
  int m = static_cast<int>(terms.size()) - 1;
  int h = m / 2;
  if (h <= first_tail_index) return 0.0;
  double tm = terms[m], th = terms[h];
  if (!(tm > 0.0) || !(th > 0.0)) return 0.0;
  double p = std::log(th / tm) / std::log(static_cast<double>(m) / h);
  if (p <= 1.05) return std::numeric_limits<double>::quiet_NaN();  // non-integrable fit
  return tm * m / (p - 1.0);
}

}  // namespace

SumRuleReport sum_rule(SumRuleKind kind, const spectrum::BoundaryParam& boundary,
                       int n, int m_max, double wavenumber_x0) {
  if (n < 1) throw std::invalid_argument("sum_rule: n must be >= 1");
  SumRuleReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.lambda = lambda_for_report(boundary);
  rep.m_max = m_max;
  rep.tolerance = declared_tolerance(kind);

  if (kind == SumRuleKind::bethe) {
    // <n|[e^{-iqx},[H,e^{iqx}]]|n>/2 collapses to a c-number; no elements enter
    rep.lhs_partial = 0.0;
    rep.tail_estimate = 0.0;
    rep.rhs_closed = wavenumber_x0 * wavenumber_x0;
    rep.converged = true;
    return rep;
  }

  if (m_max < n + 10) throw std::invalid_argument("sum_rule: m_max must be >= n + 10");

  std::vector<spectrum::EigenState> basis = spectrum::solve_roots(boundary, m_max);
  const spectrum::EigenState* sn = nullptr;
  for (const auto& s : basis)
    if (s.n == n) sn = &s;
  if (!sn) throw std::logic_error("sum_rule: reference state missing from basis");

  double zn = sn->zeta;
  switch (kind) {
    case SumRuleKind::closure:
      rep.rhs_closed = elements::xi_power(*sn, *sn, 2);
      break;
    case SumRuleKind::trk:
      rep.rhs_closed = 1.0;
      break;
    case SumRuleKind::monopole:
      rep.rhs_closed = 4.0 * elements::xi_power(*sn, *sn, 2);
      break;
    case SumRuleKind::second_moment:
      // (hbar^2/m^2) <p^2> restated in E0^2 x0^2 units
      rep.rhs_closed = -4.0 / 3.0 * (zn - sn->psi0 * sn->dpsi0);
      break;
    case SumRuleKind::bethe:
      break;
  }

  // terms ordered by level index; the index-0 extra state contributes first
  std::vector<double> terms(basis.size(), 0.0);
  double partial = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& sm = basis[i];
    double t = 0.0;
    switch (kind) {
      case SumRuleKind::closure: {
        double x = elements::xi_power(*sn, sm, 1);
        t = x * x;
        break;
      }
      case SumRuleKind::trk: {
        if (sm.n == n) break;
        double x = elements::xi_power(*sn, sm, 1);
        t = (zn - sm.zeta) * x * x;
        break;
      }
      case SumRuleKind::monopole: {
        if (sm.n == n) break;
        double x = elements::xi_power(*sn, sm, 2);
        t = (zn - sm.zeta) * x * x;
        break;
      }
      case SumRuleKind::second_moment: {
        if (sm.n == n) break;
        double x = elements::xi_power(*sn, sm, 1);
        t = (zn - sm.zeta) * (zn - sm.zeta) * x * x;
        break;
      }
      case SumRuleKind::bethe:
        break;
    }
    terms[i] = t;
    partial += t;
  }
  rep.lhs_partial = partial;
  double tail = power_tail(terms, n + 5);
  if (std::isnan(tail)) {
    rep.tail_estimate = 0.0;
    rep.converged = false;
    return rep;
  }
  rep.tail_estimate = tail;
  double resid = std::fabs(rep.lhs_partial + rep.tail_estimate - rep.rhs_closed);
  rep.converged = resid <= rep.tolerance * std::max(1.0, std::fabs(rep.rhs_closed));
  return rep;
}

double anticommutator_residual(const spectrum::BoundaryParam& boundary, int n,
                               int m_max) {
  if (m_max < n + 10)
    throw std::invalid_argument("anticommutator_residual: m_max must be >= n + 10");
  std::vector<spectrum::EigenState> basis = spectrum::solve_roots(boundary, m_max);
  const spectrum::EigenState* sn = nullptr;
  for (const auto& s : basis)
    if (s.n == n) sn = &s;
  if (!sn) throw std::logic_error("anticommutator_residual: reference state missing");
  // each term <n|x|k><k|p|n> + <n|p|k><k|x|n> collapses to
  // -i hbar <n|xi|k><k|delta|n>; the double-sided telescoping pieces cancel
  double acc = 0.0;
  for (const auto& sk : basis)
    acc += elements::xi_power(*sn, sk, 1) * elements::delta_at_origin(*sn, sk);
  return -acc;
}

namespace {
double bound_from(double psi0, double dpsi0, double zeta, double sign) {
  double a2 = psi0 * psi0;
  return std::fabs(3.0 + sign * a2 * (psi0 * dpsi0 + 2.0 * zeta)) / 6.0;
}
}  // namespace

double uncertainty_bound(const spectrum::BoundaryParam& boundary, int n) {
  spectrum::EigenState s = spectrum::solve_root(boundary, n);
  return bound_from(s.psi0, s.dpsi0, s.zeta, -1.0);
}

double uncertainty_bound_integral_convention(const spectrum::BoundaryParam& boundary,
                                             int n) {
  spectrum::EigenState s = spectrum::solve_root(boundary, n);
  return bound_from(s.psi0, s.dpsi0, s.zeta, +1.0);
}

Variances variances(const spectrum::BoundaryParam& boundary, int n) {
  spectrum::EigenState s = spectrum::solve_root(boundary, n);
  double x1 = elements::xi_power(s, s, 1);
  double x2 = elements::xi_power(s, s, 2);
  Variances v;
  v.delta_x = std::sqrt(x2 - x1 * x1);
  // <p+ p>/(hbar/x0)^2 = int psi'^2 dxi = -(1/3)(zeta + 2 psi0 psi0');
  // |<p>|^2 contributes alpha^4/4 in the same units
  double pdagp = -(s.zeta + 2.0 * s.psi0 * s.dpsi0) / 3.0;
  double a2 = s.psi0 * s.psi0;
  v.delta_p = std::sqrt(pdagp - 0.25 * a2 * a2);
  v.product = v.delta_x * v.delta_p;
  v.bound = bound_from(s.psi0, s.dpsi0, s.zeta, -1.0);
  // the Cauchy-Schwarz inequality pins the integral-convention orientation
  double strict = bound_from(s.psi0, s.dpsi0, s.zeta, +1.0);
  if (v.product < strict * (1.0 - 1e-12))
    throw std::runtime_error("variances: covariance bound violated (internal error)");
  return v;
}

}  // namespace bouncer::rules
