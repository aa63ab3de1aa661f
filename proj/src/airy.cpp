#include "bouncer/airy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bouncer/detail/dd.hpp"

namespace bouncer::airy {

using detail::CDD;
using detail::DD;

namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
constexpr DD kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kNegAip0{0.2588194037928068, -2.522243111610832e-17};
constexpr DD kTwoThirds{0.6666666666666666, 3.700743415417188e-17};
constexpr DD kPiOver4{0.7853981633974483, 3.061616997868383e-17};
constexpr DD kTwoPi{6.283185307179586, 2.4492935982947064e-16};
constexpr double kInvSqrtPi = 0.5641895835477563;

// exp(-zeta) underflows past this; Ai(x) is a true double-precision zero
constexpr double kExpArgLimit = 705.0;

// Maclaurin solutions of w'' = z w:
//   f = 1 + z^3/6 + z^6/180 + ...    g = z + z^4/12 + z^7/504 + ...
// Ai = Ai(0) f + Ai'(0) g. Summed in double-double; the series is entire,
// accuracy in finite precision is what limits the usable radius.
struct SeriesResult {
  DD value, derivative;
};

SeriesResult maclaurin_real(double x) {
  DD z3 = detail::dd_mul(detail::two_prod(x, x), x);
  DD tf{1.0, 0.0};
  DD tg{x, 0.0};
  DD tfp = detail::dd_div(detail::two_prod(x, x), 2.0);  // first f' term (k=1)
  DD tgp{1.0, 0.0};

  DD f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 0; k < 300; ++k) {
    double dk = 3.0 * k;
    tf = detail::dd_div(detail::dd_mul(tf, z3), (dk + 2.0) * (dk + 3.0));
    tg = detail::dd_div(detail::dd_mul(tg, z3), (dk + 3.0) * (dk + 4.0));
    tgp = detail::dd_div(detail::dd_mul(tgp, z3), (dk + 1.0) * (dk + 3.0));
    tfp = detail::dd_div(detail::dd_mul(tfp, z3), (dk + 3.0) * (dk + 5.0));
    f = detail::dd_add(f, tf);
    g = detail::dd_add(g, tg);
    gp = detail::dd_add(gp, tgp);
    fp = detail::dd_add(fp, tfp);
    double scale = std::max({std::fabs(f.hi), std::fabs(g.hi), 1.0});
    if (std::fabs(tf.hi) < 1e-35 * scale && std::fabs(tg.hi) < 1e-35 * scale) break;
  }
  SeriesResult r;
  r.value = detail::dd_sub(detail::dd_mul(kAi0, f), detail::dd_mul(kNegAip0, g));
  r.derivative = detail::dd_sub(detail::dd_mul(kAi0, fp), detail::dd_mul(kNegAip0, gp));
  return r;
}

// phase (2/3)t^{3/2} and its reduction mod 2pi, kept in double-double so the
// oscillatory branch stays accurate for large |x|
struct Phase {
  DD zeta;
  double cos_phi, sin_phi;  // of zeta - pi/4, reduced
};

Phase phase_for(double t) {
  DD tdd{t, 0.0};
  DD zeta = detail::dd_mul(detail::dd_mul(kTwoThirds, tdd), detail::dd_sqrt(tdd));
  DD phi = detail::dd_sub(zeta, kPiOver4);
  double k = std::nearbyint(phi.hi / kTwoPi.hi);
  phi = detail::dd_sub(phi, detail::dd_mul(kTwoPi, k));
  double c = std::cos(phi.hi), s = std::sin(phi.hi);
  return {zeta, c - phi.lo * s, s + phi.lo * c};
}

// u_k, v_k coefficients of the large-|x| expansions,
//   u_0 = 1, u_{k+1} = u_k (3k+1/2)(3k+3/2)(3k+5/2) / (54 (k+1)(k+1/2))
//   v_k = (6k+1)/(1-6k) u_k
struct AsymCoeffs {
  std::array<double, 64> u{}, v{};
  AsymCoeffs() {
    u[0] = 1.0;
    v[0] = 1.0;
    for (int k = 0; k + 1 < 64; ++k) {
      double a = 3.0 * k;
      u[k + 1] = u[k] * (a + 0.5) * (a + 1.5) * (a + 2.5) /
                 (54.0 * (k + 1.0) * (k + 0.5));
      v[k + 1] = (6.0 * (k + 1) + 1.0) / (1.0 - 6.0 * (k + 1)) * u[k + 1];
    }
  }
};
const AsymCoeffs kAsym;

// alternating sum sum_k (-1)^k c[start+2k] / zeta^{start+2k}, truncated at the
// smallest term (standard optimal truncation of the divergent expansion)
double asym_sum(const std::array<double, 64>& c, double zeta, int start, int stride) {
  double sum = 0.0, prev = std::numeric_limits<double>::infinity();
  double zp = std::pow(zeta, -start);
  int sgn = 1;
  for (int k = start; k < 64; k += stride) {
    double term = c[k] * zp;
    if (std::fabs(term) >= prev) break;
    sum += sgn * term;
    prev = std::fabs(term);
    if (prev < 1e-18 * std::fabs(sum)) break;
    sgn = -sgn;
    zp /= std::pow(zeta, stride);
  }
  return sum;
}

AiryPair asym_negative(double x) {
  double t = -x;
  Phase ph = phase_for(t);
  double z = detail::to_double(ph.zeta);
  double t4 = std::pow(t, 0.25);
  double P = asym_sum(kAsym.u, z, 0, 2);
  double Q = asym_sum(kAsym.u, z, 1, 2);
  double R = asym_sum(kAsym.v, z, 0, 2);
  double S = asym_sum(kAsym.v, z, 1, 2);
  AiryPair out;
  out.value = kInvSqrtPi / t4 * (ph.cos_phi * P + ph.sin_phi * Q);
  out.derivative = kInvSqrtPi * t4 * (ph.sin_phi * R - ph.cos_phi * S);
  return out;
}

AiryPair asym_positive(double x, bool scaled) {
  DD tdd{x, 0.0};
  DD zeta = detail::dd_mul(detail::dd_mul(kTwoThirds, tdd), detail::dd_sqrt(tdd));
  double z = zeta.hi;
  double x4 = std::pow(x, 0.25);
  double U = asym_sum(kAsym.u, z, 0, 1);
  double V = asym_sum(kAsym.v, z, 0, 1);
  AiryPair out;
  if (scaled) {
    out.value = 0.5 * kInvSqrtPi / x4 * U;
    out.derivative = -0.5 * kInvSqrtPi * x4 * V;
    return out;
  }
  if (z > kExpArgLimit) {
    out.underflowed = true;
    return out;  // exact zero in double precision, flagged
  }
  double e = std::exp(-zeta.hi) * (1.0 - zeta.lo);
  out.value = 0.5 * kInvSqrtPi / x4 * e * U;
  out.derivative = -0.5 * kInvSqrtPi * x4 * e * V;
  return out;
}

void check_finite(double x) {
  if (!std::isfinite(x)) throw std::domain_error("airy: non-finite argument");
}

}  // namespace

AiryPair airy(double x) {
  check_finite(x);
  if (x > series_radius) return asym_positive(x, false);
  if (x < -series_radius) return asym_negative(x);
  SeriesResult s = maclaurin_real(x);
  return {detail::to_double(s.value), detail::to_double(s.derivative), false};
}

double ai(double x) { return airy(x).value; }
double ai_prime(double x) { return airy(x).derivative; }

AiryPair airy_scaled(double x) {
  check_finite(x);
  if (x < 0.0) throw std::domain_error("airy_scaled: needs x >= 0");
  if (x > series_radius) return asym_positive(x, true);
  SeriesResult s = maclaurin_real(x);
  double zeta = kTwoThirds.hi * x * std::sqrt(x);
  double e = std::exp(zeta);
  return {detail::to_double(s.value) * e, detail::to_double(s.derivative) * e, false};
}

ComplexAiryPair airy_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("airy_complex: non-finite argument");
  if (std::abs(z) > complex_radius)
    throw std::domain_error("airy_complex: |z| > " + std::to_string(complex_radius) +
                            " outside supported series disc");

  CDD z3;
  {
    CDD zc{{z.real(), 0.0}, {z.imag(), 0.0}};
    z3 = detail::cdd_mul(detail::cdd_mul(zc, zc), zc);
  }
  CDD tf{{1.0, 0.0}, {0.0, 0.0}};
  CDD tg{{z.real(), 0.0}, {z.imag(), 0.0}};
  CDD tfp;  // first term z^2/2 at k=1
  {
    CDD zc{{z.real(), 0.0}, {z.imag(), 0.0}};
    tfp = detail::cdd_div(detail::cdd_mul(zc, zc), 2.0);
  }
  CDD tgp{{1.0, 0.0}, {0.0, 0.0}};
  CDD f = tf, g = tg, fp = tfp, gp = tgp;
  for (int k = 0; k < 300; ++k) {
    double dk = 3.0 * k;
    tf = detail::cdd_div(detail::cdd_mul(tf, z3), (dk + 2.0) * (dk + 3.0));
    tg = detail::cdd_div(detail::cdd_mul(tg, z3), (dk + 3.0) * (dk + 4.0));
    tgp = detail::cdd_div(detail::cdd_mul(tgp, z3), (dk + 1.0) * (dk + 3.0));
    tfp = detail::cdd_div(detail::cdd_mul(tfp, z3), (dk + 3.0) * (dk + 5.0));
    f = detail::cdd_add(f, tf);
    g = detail::cdd_add(g, tg);
    fp = detail::cdd_add(fp, tfp);
    gp = detail::cdd_add(gp, tgp);
    double tmag = std::fabs(tf.re.hi) + std::fabs(tf.im.hi) + std::fabs(tg.re.hi) +
                  std::fabs(tg.im.hi);
    double fmag = std::max(1.0, std::fabs(f.re.hi) + std::fabs(f.im.hi));
    if (tmag < 1e-35 * fmag) break;
  }
  auto combine = [](const CDD& fs, const CDD& gs) {
    DD re = detail::dd_sub(detail::dd_mul(kAi0, fs.re), detail::dd_mul(kNegAip0, gs.re));
    DD im = detail::dd_sub(detail::dd_mul(kAi0, fs.im), detail::dd_mul(kNegAip0, gs.im));
    return std::complex<double>(detail::to_double(re), detail::to_double(im));
  };
  return {combine(f, g), combine(fp, gp)};
}

double zero_estimate(ZeroKind kind, int n) {
  double q = (kind == ZeroKind::dirichlet) ? (4.0 * n - 1.0) : (4.0 * n - 3.0);
  return -std::pow(3.0 * M_PI * q / 8.0, 2.0 / 3.0);
}

ClassicalZero classical_zero(ZeroKind kind, int n) {
  if (n < 1 || n > 10000)
    throw std::invalid_argument("classical_zero: index must be in [1, 10000]");

  auto f = [&](double x) {
    AiryPair p = airy(x);
    return (kind == ZeroKind::dirichlet) ? p.value : p.derivative;
  };
  auto fprime = [&](double x) {
    AiryPair p = airy(x);
    // Ai'' = x Ai
    return (kind == ZeroKind::dirichlet) ? p.derivative : x * p.value;
  };

  double seed = zero_estimate(kind, n);
  double w = 0.4 * M_PI / std::sqrt(-seed);
  double lo = seed - w, hi = seed + w;
  if (kind == ZeroKind::neumann && n == 1) {
    lo = -1.4;
    hi = -0.6;
  }
  double flo = f(lo), fhi = f(hi);
  for (int tries = 0; flo * fhi > 0.0 && tries < 40; ++tries) {
    w *= 1.4;
    lo = seed - w;
    hi = std::min(seed + w, -1e-3);
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0.0) throw std::runtime_error("classical_zero: bracketing failed");

  // shrink by bisection, then Newton with the bracket as safeguard
  for (int i = 0; i < 20; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 60; ++i) {
    double fx = f(x);
    if (fx == 0.0) break;
    if (flo * fx <= 0.0)
      hi = x;
    else
      lo = x;
    double step = fx / fprime(x);
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::fabs(xn - x) < 1e-16 * std::fabs(x)) {
      x = xn;
      break;
    }
    x = xn;
  }
  // ulp walk: Newton may settle one ulp off the minimizing double
  double fx = std::fabs(f(x));
  for (int dir = -1; dir <= 1; dir += 2) {
    for (int i = 0; i < 3; ++i) {
      double xn = std::nextafter(x, dir < 0 ? lo : hi);
      double fn = std::fabs(f(xn));
      if (fn < fx) {
        x = xn;
        fx = fn;
      } else {
        break;
      }
    }
  }
  return {kind, n, x};
}

}  // namespace bouncer::airy
