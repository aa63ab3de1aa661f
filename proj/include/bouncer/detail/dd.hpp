#ifndef BOUNCER_DETAIL_DD_HPP
#define BOUNCER_DETAIL_DD_HPP

#include <cmath>

// Minimal double-double arithmetic (~31 significant digits) built on
// error-free transforms. Used where a plain double power series loses
// digits to cancellation; not a general-purpose extended-precision type.

namespace bouncer::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// requires |a| >= |b|
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline DD dd_add(const DD& a, double b) {
  DD s = two_sum(a.hi, b);
  return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline DD dd_mul(const DD& a, double b) {
  DD p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD dd_div(const DD& a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quick_two_sum(q1, q2);
}

inline DD dd_div(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  double q3 = r.hi / b.hi;
  return dd_add(quick_two_sum(q1, q2), q3);
}

inline DD dd_sqrt(const DD& a) {
  // one Newton step on 1/sqrt from the double seed
  double y = std::sqrt(a.hi);
  if (y == 0.0) return {0.0, 0.0};
  DD y2 = two_prod(y, y);
  DD r = dd_sub(a, y2);
  return quick_two_sum(y, r.hi / (2.0 * y));
}

inline double to_double(const DD& a) { return a.hi + a.lo; }

// complex value with double-double components
struct CDD {
  DD re, im;
};

inline CDD cdd_add(const CDD& a, const CDD& b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline CDD cdd_mul(const CDD& a, const CDD& b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline CDD cdd_div(const CDD& a, double b) {
  return {dd_div(a.re, b), dd_div(a.im, b)};
}

}  // namespace bouncer::detail

#endif
