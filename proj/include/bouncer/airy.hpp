#ifndef BOUNCER_AIRY_HPP
#define BOUNCER_AIRY_HPP

#include <complex>

namespace bouncer::airy {

/// Ai and Ai' at a common argument. `underflowed` is set when the true
/// value is below the double-precision floor and 0 is returned instead.
struct AiryPair {
  double value = 0.0;
  double derivative = 0.0;
  bool underflowed = false;
};

struct ComplexAiryPair {
  std::complex<double> value;
  std::complex<double> derivative;
};

// Maclaurin series is used for |x| <= series_radius, asymptotic
// expansions beyond. The complex series is restricted to |z| <= complex_radius.
inline constexpr double series_radius = 9.0;
inline constexpr double complex_radius = 8.0;

/// Ai(x) and Ai'(x) for real x. Throws std::domain_error on non-finite input.
AiryPair airy(double x);

double ai(double x);
double ai_prime(double x);

/// {Ai(x)*e^{zeta}, Ai'(x)*e^{zeta}} with zeta = (2/3)x^{3/2}, for x >= 0.
/// Stable ratio Ai/Ai' far into the classically forbidden region.
AiryPair airy_scaled(double x);

/// Ai(z), Ai'(z) on the disc |z| <= complex_radius; throws std::domain_error
/// outside (explicit unsupported-range error, not silent inaccuracy).
ComplexAiryPair airy_complex(std::complex<double> z);

enum class ZeroKind { dirichlet, neumann };

struct ClassicalZero {
  ZeroKind kind;
  int index;     // 1-based
  double value;  // negative
};

/// Semiclassical estimate of the n-th zero of Ai (dirichlet) or Ai' (neumann);
/// within ~1% of the true zero, used to seed the bracketed Newton iteration.
double zero_estimate(ZeroKind kind, int n);

/// n-th zero of Ai or Ai', n in [1, 10000]. Newton from the semiclassical
/// seed, safeguarded by bracketing.
ClassicalZero classical_zero(ZeroKind kind, int n);

}  // namespace bouncer::airy

#endif
