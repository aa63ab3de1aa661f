#ifndef BOUNCER_CLI_HPP
#define BOUNCER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bouncer/qbounce.hpp"

namespace bouncer::cli {

/// Parsed global configuration: physical constants plus output options.
/// Config files may set exactly the keys below; unknown keys are rejected
/// with an error naming the key.
struct RunConfig {
  qbounce::Constants constants;
  std::string format = "csv";  // csv | json
  int precision = 10;          // significant digits in CSV output
};

/// one entry of the `verify` report
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Full oracle cross-check suite: orthonormality, closed forms vs quadrature,
/// recursion residuals, sum-rule convergence, and the reality of the
/// phase-to-lambda map over a (theta, eps) grid. `inject_root_error` shifts
/// every root by that amount before the residual checks run; it exists to
/// demonstrate the suite's sensitivity and is exposed via a debug flag.
std::vector<CheckResult> run_verification(double inject_root_error = 0.0);

/// Entry point used by the binary and by tests. Returns the process exit
/// code: 0 success, 1 usage/config error, 2 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bouncer::cli

#endif
