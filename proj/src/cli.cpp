#include "bouncer/cli.hpp"

#include <CLI11.hpp>
#include <cinttypes>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <json.hpp>

#include "bouncer/airy.hpp"
#include "bouncer/elements.hpp"
#include "bouncer/oracle.hpp"
#include "bouncer/rules.hpp"
#include "bouncer/spectrum.hpp"

namespace bouncer::cli {

namespace {

using json = nlohmann::ordered_json;
using spectrum::BoundaryParam;

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string config_hash(const RunConfig& cfg) {
  char canon[256];
  std::snprintf(canon, sizeof(canon),
                "mass=%.17g;g=%.17g;hbar=%.17g;h=%.17g;eV=%.17g;precision=%d",
                cfg.constants.mass, cfg.constants.g, cfg.constants.hbar,
                cfg.constants.h, cfg.constants.eV, cfg.precision);
  // FNV-1a, 64-bit
  std::uint64_t hash = 1469598103934665603ULL;
  for (const char* p = canon; *p; ++p) {
    hash ^= static_cast<unsigned char>(*p);
    hash *= 1099511628211ULL;
  }
  char out[32];
  std::snprintf(out, sizeof(out), "%016" PRIx64, hash);
  return out;
}

// a table with named columns, emitted as CSV or as the {"meta", "rows"} object
class Table {
 public:
  Table(std::vector<std::string> columns, std::string command, const RunConfig& cfg)
      : columns_(std::move(columns)), command_(std::move(command)), cfg_(cfg) {}

  void add_row(std::vector<double> values) { rows_.push_back(std::move(values)); }

  void emit(std::ostream& out) const {
    if (cfg_.format == "json") {
      json doc;
      doc["meta"] = {{"command", command_}, {"config_hash", config_hash(cfg_)}};
      doc["rows"] = json::array();
      for (const auto& r : rows_) {
        json row;
        for (std::size_t i = 0; i < columns_.size(); ++i) row[columns_[i]] = r[i];
        doc["rows"].push_back(row);
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i)
      out << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i)
        out << fmt(r[i], cfg_.precision) << (i + 1 < r.size() ? "," : "\n");
    }
  }

 private:
  std::vector<std::string> columns_;
  std::string command_;
  RunConfig cfg_;
  std::vector<std::vector<double>> rows_;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", std::string("parse error: ") + e.what());
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "mass")
      cfg.constants.mass = it.value().get<double>();
    else if (key == "g")
      cfg.constants.g = it.value().get<double>();
    else if (key == "hbar")
      cfg.constants.hbar = it.value().get<double>();
    else if (key == "h")
      cfg.constants.h = it.value().get<double>();
    else if (key == "eV")
      cfg.constants.eV = it.value().get<double>();
    else if (key == "format")
      cfg.format = it.value().get<std::string>();
    else if (key == "precision")
      cfg.precision = it.value().get<int>();
    else
      throw CLI::ValidationError("--config", "unknown key \"" + key + "\"");
  }
  if (cfg.format != "csv" && cfg.format != "json")
    throw CLI::ValidationError("--config", "format must be csv or json");
  if (cfg.precision < 1 || cfg.precision > 17)
    throw CLI::ValidationError("--config", "precision must be in [1, 17]");
}

BoundaryParam boundary_from(double lambda, bool neumann) {
  return neumann ? BoundaryParam::neumann() : BoundaryParam(lambda);
}

// ---- verify ----------------------------------------------------------------

void check(std::vector<CheckResult>& out, const std::string& name, double residual,
           double tolerance) {
  out.push_back({name, residual, tolerance, std::fabs(residual) <= tolerance});
}

spectrum::EigenState perturbed(const spectrum::EigenState& s, double eps) {
  if (eps == 0.0) return s;
  spectrum::EigenState p = s;
  p.zeta += eps;
  return p;
}

}  // namespace

std::vector<CheckResult> run_verification(double inject_root_error) {
  std::vector<CheckResult> checks;
  const std::vector<double> lambda_grid = {0.0, 0.11928, 1.0, 10.0};

  // orthonormality by quadrature, n,k <= 8
  for (double lam : lambda_grid) {
    auto basis = spectrum::solve_roots(BoundaryParam(lam), 8);
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        auto a = perturbed(basis[i], inject_root_error);
        auto b = perturbed(basis[j], inject_root_error);
        double want = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::fabs(oracle::overlap(a, b, 0).value - want));
      }
    }
    check(checks, "orthonormality lambda=" + fmt(lam, 6), worst, 1e-8);
  }

  // closed forms vs adaptive quadrature on 50 deterministic random tuples
  {
    std::mt19937 rng(20250809);
    std::uniform_real_distribution<double> lam_dist(0.0, 5.0);
    std::uniform_int_distribution<int> idx(1, 6);
    double worst_x = 0.0, worst_x2 = 0.0, worst_p = 0.0, worst_p2 = 0.0;
    for (int t = 0; t < 50; ++t) {
      double lam = lam_dist(rng);
      int n = idx(rng), k = idx(rng);
      BoundaryParam b(lam);
      auto sn = perturbed(spectrum::solve_root(b, n), inject_root_error);
      auto sk = (k == n) ? sn : perturbed(spectrum::solve_root(b, k), inject_root_error);
      auto mixed = [](double closed, double quad) {
        return std::fabs(closed - quad) / std::max(1.0, std::fabs(closed));
      };
      double x1 = elements::xi_power(sn, sk, 1);
      worst_x = std::max(worst_x, mixed(x1, oracle::overlap(sn, sk, 1).value));
      double x2 = elements::xi_power(sn, sk, 2);
      worst_x2 = std::max(worst_x2, mixed(x2, oracle::overlap(sn, sk, 2).value));
      // element convention: <n|p|k> = +i * integral psi_k psi_n'
      double p_closed = elements::momentum(sn, sk).imag();
      double p_quad = oracle::derivative_overlap(sk, sn).value;
      worst_p = std::max(worst_p, mixed(p_closed, p_quad));
      // p^2 via the Airy equation applied to the ket, units m*E0
      double p2_closed = elements::momentum_squared(sn, sk);
      double p2_quad = -2.0 * (oracle::overlap(sn, sk, 1).value +
                               sk.zeta * oracle::overlap(sn, sk, 0).value);
      worst_p2 = std::max(worst_p2, mixed(p2_closed, p2_quad));
    }
    check(checks, "x element vs quadrature (50 tuples)", worst_x, 1e-8);
    check(checks, "x^2 element vs quadrature (50 tuples)", worst_x2, 1e-8);
    check(checks, "p element vs quadrature (50 tuples)", worst_p, 1e-8);
    check(checks, "p^2 element vs quadrature (50 tuples)", worst_p2, 1e-8);
  }

  // recursion identity fed by quadrature elements, q <= 6
  {
    double worst = 0.0;
    for (double lam : lambda_grid) {
      BoundaryParam b(lam);
      for (int n = 1; n <= 4; n += 3) {
        for (int k = 1; k <= 4; k += 1) {
          auto sn = perturbed(spectrum::solve_root(b, n), inject_root_error);
          auto sk = (k == n) ? sn : perturbed(spectrum::solve_root(b, k),
                                              inject_root_error);
          auto quad_elems = [&](int m) { return oracle::overlap(sn, sk, m).value; };
          for (int q = 1; q <= 6; ++q)
            worst = std::max(
                worst, std::fabs(elements::recursion_residual(sn, sk, q, quad_elems)));
        }
      }
    }
    check(checks, "recursion residual, quadrature-fed, q<=6", worst, 1e-8);
  }

  // sum rules
  {
    double worst_trk = 0.0;
    for (double lam : {0.0, 0.11928, 1.0}) {
      auto rep = rules::sum_rule(rules::SumRuleKind::trk, BoundaryParam(lam), 1, 2000);
      worst_trk = std::max(
          worst_trk, std::fabs(rep.lhs_partial + rep.tail_estimate - rep.rhs_closed));
    }
    check(checks, "TRK partial sum (m_max=2000, tail-corrected)", worst_trk, 1e-3);

    auto closure =
        rules::sum_rule(rules::SumRuleKind::closure, BoundaryParam(0.11928), 1, 400);
    check(checks, "closure sum (m_max=400)",
          closure.lhs_partial + closure.tail_estimate - closure.rhs_closed, 1e-6);

    auto bethe = rules::sum_rule(rules::SumRuleKind::bethe, BoundaryParam(0.11928), 1,
                                 100, 1.7);
    check(checks, "Bethe rule exact", bethe.rhs_closed - 1.7 * 1.7, 0.0);

    // second-moment right-hand side vs the p^2 diagonal closed form
    auto sm =
        rules::sum_rule(rules::SumRuleKind::second_moment, BoundaryParam(1.0), 1, 60);
    double p2 = elements::p2_element(BoundaryParam(1.0), 1, 1);
    check(checks, "second-moment RHS vs p^2 diagonal", sm.rhs_closed - 2.0 * p2, 1e-10);
  }

  // reality of lambda(theta, eps) over the U(1) phase grid
  {
    double worst = 0.0;
    bool pole_hit = false;
    for (int it = 0; it < 32; ++it) {
      double theta = 2.0 * M_PI * it / 31.0;
      for (int ie = 1; ie <= 16; ++ie) {
        double eps = 3.0 * ie / 16.0;
        std::complex<double> iep(0.0, eps);
        auto plus = airy::airy_complex(iep);
        auto minus = airy::airy_complex(-iep);
        std::complex<double> phase = std::exp(std::complex<double>(0.0, -theta));
        std::complex<double> den = plus.value + phase * minus.value;
        if (std::abs(den) < 1e-12) {
          pole_hit = true;  // extension point where the psi(0) coefficient dies
          continue;
        }
        std::complex<double> lam = (plus.derivative + phase * minus.derivative) / den;
        worst = std::max(worst,
                         std::fabs(lam.imag()) / std::max(1.0, std::fabs(lam.real())));
      }
    }
    (void)pole_hit;
    check(checks, "phase-map reality over 32x16 grid", worst, 1e-10);
  }

  return checks;
}

namespace {

int cmd_verify(const RunConfig& cfg, double inject, std::ostream& out) {
  auto checks = run_verification(inject);
  json doc;
  doc["meta"] = {{"command", "verify"}, {"config_hash", config_hash(cfg)}};
  doc["checks"] = json::array();
  bool all = true;
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"residual", c.residual},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
    all = all && c.pass;
  }
  doc["pass"] = all;
  out << doc.dump(2) << "\n";
  return all ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral toolkit for a quantum particle above a mirror with a "
               "Robin boundary wall",
               "bouncer"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with constants/output options");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", cfg.precision, "CSV significant digits")
      ->check(CLI::Range(1, 17));

  struct {
    double lambda = 0.0;
    bool neumann = false;
    int n_max = 7;
    double g = 0.0;  // 0 = use config
    int n = 1, k = 2, q = 2, steps = 200, m_max = 400;
    double nu = 0.0, sigma = 0.0;
    std::string transition = "1:6";
    std::string kind = "trk";
    std::string observable = "transition:1:6";
    double lambda_min = 0.0, lambda_max = 1.0;
    double xi_max = 12.0, wavenumber = 1.0, inject = 0.0;
    int theta_steps = 32, eps_steps = 16;
    double eps_max = 3.0;
  } o;

  auto add_lambda = [&](CLI::App* c) {
    c->add_option("--lambda", o.lambda, "boundary parameter");
    c->add_flag("--neumann", o.neumann, "Neumann wall (lambda -> infinity)");
  };

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "levels n, zeta_n, E_n [peV]");
  add_lambda(c_spectrum);
  c_spectrum->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
  c_spectrum->add_option("--g", o.g, "override local acceleration [m/s^2]");

  CLI::App* c_eigen = app.add_subcommand(
      "eigenfunction", "grid samples of psi_n(xi) and the density rho_n(xi)");
  add_lambda(c_eigen);
  c_eigen->add_option("--n", o.n)->check(CLI::PositiveNumber);
  c_eigen->add_option("--xi-max", o.xi_max)->check(CLI::PositiveNumber);
  c_eigen->add_option("--steps", o.steps)->check(CLI::Range(2, 1000000));

  CLI::App* c_elem = app.add_subcommand(
      "elements", "matrix elements <n|.|k> for x^q, p, p^2 and the boundary delta");
  add_lambda(c_elem);
  c_elem->add_option("--n", o.n)->check(CLI::PositiveNumber);
  c_elem->add_option("--k", o.k)->check(CLI::PositiveNumber);
  c_elem->add_option("--q", o.q, "highest x power")->check(CLI::Range(0, 12));

  CLI::App* c_sum = app.add_subcommand("sumrule", "sum-rule report");
  add_lambda(c_sum);
  c_sum->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"closure", "trk", "monopole", "second-moment", "bethe"}));
  c_sum->add_option("--n", o.n)->check(CLI::PositiveNumber);
  c_sum->add_option("--m-max", o.m_max)->check(CLI::PositiveNumber);
  c_sum->add_option("--wavenumber", o.wavenumber, "q*x0 for the Bethe rule");

  CLI::App* c_unc = app.add_subcommand("uncertainty", "bound, Delta x, Delta p");
  add_lambda(c_unc);
  c_unc->add_option("--n", o.n)->check(CLI::PositiveNumber);

  CLI::App* c_fit = app.add_subcommand("fit", "chi^2 fit of lambda to a frequency");
  c_fit->add_option("--nu", o.nu, "measured frequency [Hz]")->required();
  c_fit->add_option("--sigma", o.sigma, "1-sigma uncertainty [Hz]")->required();
  c_fit->add_option("--transition", o.transition, "level pair n:k");

  CLI::App* c_g = app.add_subcommand("extract-g", "local g from a frequency");
  c_g->add_option("--nu", o.nu, "measured frequency [Hz]")->required();
  add_lambda(c_g);
  c_g->add_option("--transition", o.transition, "level pair n:k");

  CLI::App* c_pen = app.add_subcommand("penetration", "kappa0 and P_in");
  add_lambda(c_pen);
  c_pen->add_option("--n", o.n)->check(CLI::PositiveNumber);

  CLI::App* c_phase = app.add_subcommand("phase-map",
                                         "lambda(theta, eps_eta) over the U(1) grid");
  c_phase->add_option("--theta-steps", o.theta_steps)->check(CLI::Range(2, 100000));
  c_phase->add_option("--eps-steps", o.eps_steps)->check(CLI::Range(1, 100000));
  c_phase->add_option("--eps-max", o.eps_max)->check(CLI::Range(1e-6, 8.0));

  CLI::App* c_sweep = app.add_subcommand("sweep", "(lambda, observable) rows");
  c_sweep->add_option("--observable", o.observable,
                      "energy:n | transition:n:k | bound:n");
  c_sweep->add_option("--lambda-min", o.lambda_min);
  c_sweep->add_option("--lambda-max", o.lambda_max);
  c_sweep->add_option("--steps", o.steps)->check(CLI::Range(2, 1000000));
  c_sweep->add_option("--g", o.g, "override local acceleration [m/s^2]");

  CLI::App* c_verify = app.add_subcommand("verify", "oracle cross-check suite");
  c_verify->add_option("--inject-root-error", o.inject,
                       "debug hook: shift roots to prove the checks bite");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
    if (!config_path.empty()) load_config_file(config_path, cfg);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  auto parse_pair = [&](const std::string& s, int& n, int& k) {
    if (std::sscanf(s.c_str(), "%d:%d", &n, &k) != 2 || n < 1 || k <= n)
      throw CLI::ValidationError("--transition", "expected n:k with n < k");
  };

  try {
    qbounce::Constants consts = cfg.constants;
    if (o.g > 0.0) consts.g = o.g;
    qbounce::PhysicalScales scales = qbounce::scales_from(consts);
    BoundaryParam boundary = boundary_from(o.lambda, o.neumann);

    if (*c_spectrum) {
      Table t({"n", "zeta", "E_peV"}, "spectrum", cfg);
      for (const auto& row : spectrum::solve_roots(boundary, o.n_max)) {
        t.add_row({static_cast<double>(row.n), row.zeta, -scales.E0_peV * row.zeta});
      }
      t.emit(out);
      return 0;
    }
    if (*c_eigen) {
      auto s = spectrum::solve_root(boundary, o.n);
      Table t({"xi", "psi", "rho"}, "eigenfunction", cfg);
      for (int i = 0; i <= o.steps; ++i) {
        double xi = o.xi_max * i / o.steps;
        double v = spectrum::eigenfunction_value(s, xi);
        t.add_row({xi, v, v * v});
      }
      t.emit(out);
      return 0;
    }
    if (*c_elem) {
      Table t({"op", "q", "re", "im", "x0_power", "hbar_over_x0_power"}, "elements",
              cfg);
      for (int q = 0; q <= o.q; ++q) {
        auto e = elements::element(boundary, elements::Operator::x_power, o.n, o.k, q);
        t.add_row({0.0, static_cast<double>(q), e.value.real(), e.value.imag(),
                   static_cast<double>(e.x0_power),
                   static_cast<double>(e.hbar_over_x0_power)});
      }
      auto p = elements::element(boundary, elements::Operator::momentum, o.n, o.k);
      t.add_row({1.0, 1.0, p.value.real(), p.value.imag(), 0.0, 1.0});
      auto p2 =
          elements::element(boundary, elements::Operator::momentum_squared, o.n, o.k);
      t.add_row({2.0, 2.0, p2.value.real(), p2.value.imag(), 0.0, 2.0});
      auto d =
          elements::element(boundary, elements::Operator::delta_at_origin, o.n, o.k);
      t.add_row({3.0, 1.0, d.value.real(), d.value.imag(), -1.0, 0.0});
      t.emit(out);
      return 0;
    }
    if (*c_sum) {
      rules::SumRuleKind kind;
      if (o.kind == "closure")
        kind = rules::SumRuleKind::closure;
      else if (o.kind == "trk")
        kind = rules::SumRuleKind::trk;
      else if (o.kind == "monopole")
        kind = rules::SumRuleKind::monopole;
      else if (o.kind == "second-moment")
        kind = rules::SumRuleKind::second_moment;
      else
        kind = rules::SumRuleKind::bethe;
      auto rep = rules::sum_rule(kind, boundary, o.n, o.m_max, o.wavenumber);
      Table t({"n", "m_max", "lhs_partial", "tail_estimate", "rhs_closed",
               "tolerance", "converged"},
              "sumrule", cfg);
      t.add_row({static_cast<double>(rep.n), static_cast<double>(rep.m_max),
                 rep.lhs_partial, rep.tail_estimate, rep.rhs_closed, rep.tolerance,
                 rep.converged ? 1.0 : 0.0});
      t.emit(out);
      return rep.converged ? 0 : 2;
    }
    if (*c_unc) {
      auto v = rules::variances(boundary, o.n);
      Table t({"n", "bound_hbar", "delta_x_x0", "delta_p_hbar_over_x0",
               "product_hbar"},
              "uncertainty", cfg);
      t.add_row({static_cast<double>(o.n), v.bound, v.delta_x, v.delta_p, v.product});
      t.emit(out);
      return 0;
    }
    if (*c_fit) {
      qbounce::Measurement m;
      m.nu = o.nu;
      m.sigma = o.sigma;
      parse_pair(o.transition, m.n, m.k);
      auto r = qbounce::fit_lambda(m, scales);
      json doc;
      doc["meta"] = {{"command", "fit"}, {"config_hash", config_hash(cfg)}};
      doc["lambda_min"] = r.lambda_min;
      doc["delta_lambda"] = r.delta_lambda;
      doc["chi2_min"] = r.chi2_min;
      doc["lambda_interval"] = {r.lambda_lo, r.lambda_hi};
      doc["nu_model_dirichlet"] = r.nu_model_dirichlet;
      doc["nu_measured"] = m.nu;
      doc["converged"] = r.converged;
      out << doc.dump(2) << "\n";
      return r.converged ? 0 : 2;
    }
    if (*c_g) {
      qbounce::Measurement m;
      m.nu = o.nu;
      m.sigma = 1.0;
      parse_pair(o.transition, m.n, m.k);
      double g = qbounce::extract_g(m, boundary, scales);
      Table t({"g"}, "extract-g", cfg);
      t.add_row({g});
      t.emit(out);
      return 0;
    }
    if (*c_pen) {
      auto p = qbounce::penetration(boundary, o.n, scales);
      Table t({"n", "kappa0_per_m", "p_in"}, "penetration", cfg);
      t.add_row({static_cast<double>(p.n), p.kappa0, p.p_in});
      t.emit(out);
      return 0;
    }
    if (*c_phase) {
      Table t({"theta", "eps_eta", "lambda"}, "phase-map", cfg);
      for (int it = 0; it < o.theta_steps; ++it) {
        double theta = 2.0 * M_PI * it / (o.theta_steps - 1);
        for (int ie = 1; ie <= o.eps_steps; ++ie) {
          double eps = o.eps_max * ie / o.eps_steps;
          double lam;
          try {
            lam = spectrum::lambda_from_phase({theta, eps});
          } catch (const spectrum::PhasePoleError&) {
            lam = std::numeric_limits<double>::quiet_NaN();
          }
          t.add_row({theta, eps, lam});
        }
      }
      t.emit(out);
      return 0;
    }
    if (*c_sweep) {
      char what[32];
      int n = 1, k = 6;
      if (std::sscanf(o.observable.c_str(), "energy:%d", &n) == 1)
        std::snprintf(what, sizeof(what), "energy");
      else if (std::sscanf(o.observable.c_str(), "transition:%d:%d", &n, &k) == 2)
        std::snprintf(what, sizeof(what), "transition");
      else if (std::sscanf(o.observable.c_str(), "bound:%d", &n) == 1)
        std::snprintf(what, sizeof(what), "bound");
      else
        throw CLI::ValidationError("--observable",
                                   "expected energy:n, transition:n:k or bound:n");
      Table t({"lambda", "value"}, "sweep", cfg);
      for (int i = 0; i < o.steps; ++i) {
        double lam = o.lambda_min + (o.lambda_max - o.lambda_min) * i / (o.steps - 1);
        BoundaryParam b(lam);
        double value = 0.0;
        if (what[0] == 'e')
          value = -scales.E0_peV * spectrum::solve_root(b, n).zeta;
        else if (what[0] == 't')
          value = qbounce::transition_frequency(scales, b, n, k);
        else
          value = rules::uncertainty_bound(b, n);
        t.add_row({lam, value});
      }
      t.emit(out);
      return 0;
    }
    if (*c_verify) return cmd_verify(cfg, o.inject, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace bouncer::cli
