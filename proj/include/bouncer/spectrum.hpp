#ifndef BOUNCER_SPECTRUM_HPP
#define BOUNCER_SPECTRUM_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bouncer::spectrum {

/// Dimensionless Robin parameter lambda in psi(0) = lambda * psi'(0).
/// lambda = 0 is the Dirichlet wall; the Neumann wall is a dedicated marker,
/// not a floating-point infinity.
class BoundaryParam {
 public:
  explicit BoundaryParam(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("BoundaryParam: lambda must be finite");
  }
  static BoundaryParam neumann() {
    BoundaryParam p(0.0);
    p.neumann_ = true;
    return p;
  }
  bool is_neumann() const { return neumann_; }
  double value() const {
    if (neumann_) throw std::logic_error("BoundaryParam: Neumann marker has no finite lambda");
    return lambda_;
  }
  bool operator==(const BoundaryParam& o) const {
    return neumann_ == o.neumann_ && (neumann_ || lambda_ == o.lambda_);
  }

 private:
  double lambda_;
  bool neumann_ = false;
};

/// One bound state of the linear potential on the half-line under the Robin
/// condition. All amplitudes are in the dimensionless xi coordinate, so
/// dpsi0^2 - zeta*psi0^2 = 1 holds exactly as an invariant.
struct EigenState {
  int n = 0;           // 1-based tower index; 0 for the extra lambda<0 state
  BoundaryParam boundary{0.0};
  double zeta = 0.0;   // root of Ai(z) = lambda Ai'(z); negative on the tower
  double norm_xi = 0.0;   // 1/sqrt(Ai'(zeta)^2 - zeta Ai(zeta)^2); +inf if out of range
  double psi0 = 0.0;      // signed boundary value  norm_xi * Ai(zeta)
  double dpsi0 = 0.0;     // signed boundary slope  norm_xi * Ai'(zeta)
  double alpha = 0.0;        // |psi0|
  double alpha_prime = 0.0;  // |dpsi0|
  bool negative_energy = false;  // true only for the zeta > 0 state (lambda < 0)

  double energy_dimensionless() const { return -zeta; }  // units E0
};

/// States sorted by increasing energy. For finite lambda >= 0 and the Neumann
/// marker this is n = 1..n_max. For lambda < 0 one extra state exists below
/// the tower; it is returned first with index 0 (flagged when its zeta > 0),
/// so indices 1..n_max always deform continuously to the Dirichlet tower.
std::vector<EigenState> solve_roots(const BoundaryParam& boundary, int n_max);

/// Single tower state n >= 1 (cheaper than solve_roots for one level).
EigenState solve_root(const BoundaryParam& boundary, int n);

/// xi-normalized eigenfunction norm_xi * Ai(xi + zeta); multiply by
/// x0^{-1/2} for the x-normalized value.
double eigenfunction_value(const EigenState& state, double xi);
double eigenfunction_derivative(const EigenState& state, double xi);

/// a_n (1 + lambda^3/3) + lambda; validity window 0 < lambda <= 0.3.
/// `include_quartic` adds the next, n-independent lambda^4/4 term, which
/// sharpens the approximation near lambda ~ 0.12 (the remaining error is then
/// a_n^2 lambda^5/5 + O(lambda^6)).
double approx_energy_dirichlet_regime(double lambda, int n,
                                      bool include_quartic = false);

/// a'_n + (1/lambda)(1/a'_n) - (1/lambda^2)(1/(2 a'_n^3))
///      + (1/lambda^3)(1/6)(2 a'_n^3 + 3)/a'_n^5;  for lambda >= 5
double approx_energy_neumann_regime(double lambda, int n);

/// zeta_n - zeta_k = (E_k - E_n)/E0, positive for k > n
double transition_gap(const BoundaryParam& boundary, int n, int k);

/// U(1) phase data selecting the extension: the admissible boundary behavior
/// is built from Ai(xi -+ i*eps_eta) combined with phase e^{i*theta}.
struct PhaseParams {
  double theta;    // in [0, 2*pi]
  double eps_eta;  // > 0, within the complex-series disc
};

/// lambda(theta, eps_eta) = Re [Ai'(i e) + e^{-i theta} Ai'(-i e)] /
///                             [Ai(i e) + e^{-i theta} Ai(-i e)].
/// The quotient is real analytically; a relative imaginary residual above
/// 1e-10 raises an error, as does a vanishing denominator (extension pole).
double lambda_from_phase(const PhaseParams& params);

/// thrown when safeguarded root iteration fails; carries the bracket
class RootError : public std::runtime_error {
 public:
  RootError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), bracket_lo(lo), bracket_hi(hi) {}
  double bracket_lo, bracket_hi;
};

class PhasePoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bouncer::spectrum

#endif
