#include "bouncer/oracle.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <vector>
#include <stdexcept>

#include "bouncer/airy.hpp"

namespace bouncer::oracle {

namespace {

// Gauss-Kronrod 7/15 pair on [-1, 1]
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(c);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  double resabs = kWgk[7] * std::fabs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
    resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] *
              (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  // QUADPACK-style error: sharpen the raw K-G difference on smooth panels,
  // floor it at the roundoff of the absolute sum
  double err = std::fabs(resk - resg) * h;
  double asc = resasc * h;
  if (asc != 0.0 && err != 0.0)
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 10.0 * eps * resabs * h);
  return {resk * h, err};
}

// 10-point Gauss-Legendre
constexpr double kXgl[5] = {0.148874338981631, 0.433395394129247,
                            0.679409568299024, 0.865063366688985,
                            0.973906528517172};
constexpr double kWgl[5] = {0.295524224714753, 0.269266719309996,
                            0.219086362515982, 0.149451349150581,
                            0.066671344308688};

// xi beyond which the product of two eigenfunctions is truncated
double cutoff(const spectrum::EigenState& a, const spectrum::EigenState& b) {
  double zmax = std::min(a.zeta, b.zeta);  // most negative root
  return std::fabs(zmax) + 15.0;
}

// analytic bound on the discarded [xi_max, inf) contribution from the
// exponential Airy envelope Ai(t) <= e^{-(2/3)t^{3/2}} / (2 sqrt(pi) t^{1/4})
double tail_bound_for(const spectrum::EigenState& a, const spectrum::EigenState& b,
                      int q, double xi_max) {
  double ta = xi_max + a.zeta, tb = xi_max + b.zeta;
  if (ta <= 1.0 || tb <= 1.0) return 1.0;  // should not happen with our cutoff
  double expo = -2.0 / 3.0 * (std::pow(ta, 1.5) + std::pow(tb, 1.5));
  double rate = std::sqrt(ta) + std::sqrt(tb);
  double geom = rate - q / xi_max;
  if (geom <= 0.0) return 1.0;
  double pref = a.norm_xi * b.norm_xi /
                (4.0 * M_PI * std::pow(ta * tb, 0.25));
  return pref * std::pow(xi_max, q) * std::exp(expo) / geom;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double abs_tol) {
  struct Panel {
    double a, b;
    PanelEstimate est;
    bool operator<(const Panel& o) const { return est.error < o.est.error; }
  };
  double total_len = hi - lo;

  // initial fixed partition doubles as a magnitude probe: the achievable
  // absolute accuracy is limited by roundoff at the scale of int |f|
  const int init = 32;
  std::priority_queue<Panel> work;
  double magnitude = 0.0;
  double total_err = 0.0;
  for (int i = 0; i < init; ++i) {
    double a = lo + total_len * i / init;
    double b = lo + total_len * (i + 1) / init;
    Panel p{a, b, gk15(f, a, b)};
    magnitude += std::fabs(p.est.integral);
    total_err += p.est.error;
    work.push(p);
  }
  double tol = std::max(abs_tol,
                        50.0 * std::numeric_limits<double>::epsilon() * magnitude);

  // refine the worst panel until the summed estimate meets the target
  const int max_panels = 20000;
  int used = init;
  while (total_err > tol && used < max_panels) {
    Panel p = work.top();
    if (p.b - p.a < 1e-14 * total_len) break;
    work.pop();
    double mid = 0.5 * (p.a + p.b);
    Panel left{p.a, mid, gk15(f, p.a, mid)};
    Panel right{mid, p.b, gk15(f, mid, p.b)};
    total_err += left.est.error + right.est.error - p.est.error;
    work.push(left);
    work.push(right);
    used += 2;
  }

  QuadratureResult out;
  out.subdivisions = used;
  // ordered accumulation (ascending error) with compensation
  std::vector<Panel> panels;
  panels.reserve(work.size());
  while (!work.empty()) {
    panels.push_back(work.top());
    work.pop();
  }
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (auto it = panels.rbegin(); it != panels.rend(); ++it) {
    double y = it->est.integral - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += it->est.error;
  }
  out.value = sum;
  out.abs_error_estimate = err;
  out.converged = err <= tol;
  return out;
}

double integrate_composite(const std::function<double(double)>& f, double lo,
                           double hi, int panels) {
  double h = (hi - lo) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    double c = lo + (i + 0.5) * h;
    for (int j = 0; j < 5; ++j)
      sum += kWgl[j] * (f(c - 0.5 * h * kXgl[j]) + f(c + 0.5 * h * kXgl[j]));
  }
  return sum * 0.5 * h;
}

QuadratureResult overlap(const spectrum::EigenState& a, const spectrum::EigenState& b,
                         int q) {
  if (q < 0 || q > 8) throw std::invalid_argument("overlap: q must be in [0, 8]");
  double xi_max = cutoff(a, b);
  auto f = [&](double xi) {
    double v = spectrum::eigenfunction_value(a, xi) * spectrum::eigenfunction_value(b, xi);
    return (q == 0) ? v : v * std::pow(xi, q);
  };
  QuadratureResult r = integrate(f, 0.0, xi_max, 1e-11);
  r.tail_bound = tail_bound_for(a, b, q, xi_max);
  return r;
}

QuadratureResult derivative_overlap(const spectrum::EigenState& a,
                                    const spectrum::EigenState& b) {
  double xi_max = cutoff(a, b);
  auto f = [&](double xi) {
    return spectrum::eigenfunction_value(a, xi) *
           spectrum::eigenfunction_derivative(b, xi);
  };
  QuadratureResult r = integrate(f, 0.0, xi_max, 1e-11);
  r.tail_bound = tail_bound_for(a, b, 1, xi_max);
  return r;
}

QuadratureResult gradient_overlap(const spectrum::EigenState& a,
                                  const spectrum::EigenState& b) {
  double xi_max = cutoff(a, b);
  auto f = [&](double xi) {
    return spectrum::eigenfunction_derivative(a, xi) *
           spectrum::eigenfunction_derivative(b, xi);
  };
  QuadratureResult r = integrate(f, 0.0, xi_max, 1e-11);
  r.tail_bound = tail_bound_for(a, b, 1, xi_max);
  return r;
}

double bisect_zero(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw std::invalid_argument("bisect_zero: no sign change on bracket");
  for (int i = 0; i < 260 && (hi - lo) > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// ---- slow reference series -------------------------------------------------

namespace {
constexpr long double kAi0L = 0.355028053887817239260063186004L;
constexpr long double kAip0L = -0.258819403792806798405183560189L;

struct Kahan {
  long double sum = 0.0L, c = 0.0L;
  void add(long double term) {
    long double y = term - c;
    long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};
}  // namespace

long double ai_series_reference(long double x) {
  long double z3 = x * x * x;
  long double tf = 1.0L, tg = x;
  Kahan acc;
  acc.add(kAi0L * tf);
  acc.add(kAip0L * tg);
  for (int k = 0; k < 240; ++k) {
    long double dk = 3.0L * k;
    tf = tf * z3 / ((dk + 2.0L) * (dk + 3.0L));
    tg = tg * z3 / ((dk + 3.0L) * (dk + 4.0L));
    acc.add(kAi0L * tf);
    acc.add(kAip0L * tg);
  }
  return acc.sum;
}

long double ai_prime_series_reference(long double x) {
  long double z3 = x * x * x;
  long double tfp = 0.5L * x * x, tgp = 1.0L;
  Kahan acc;
  acc.add(kAi0L * tfp);
  acc.add(kAip0L * tgp);
  for (int k = 0; k < 240; ++k) {
    long double dk = 3.0L * k;
    tfp = tfp * z3 / ((dk + 3.0L) * (dk + 5.0L));
    tgp = tgp * z3 / ((dk + 1.0L) * (dk + 3.0L));
    acc.add(kAi0L * tfp);
    acc.add(kAip0L * tgp);
  }
  return acc.sum;
}

}  // namespace bouncer::oracle
