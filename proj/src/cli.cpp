#include "hstrip/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hstrip/elliptic.hpp"
#include "hstrip/errors.hpp"
#include "hstrip/map_family.hpp"
#include "hstrip/param_solver.hpp"
#include "hstrip/verifier.hpp"

namespace hstrip::cli {
namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  double alpha = 1;
  std::optional<double> beta;
  std::optional<double> a;
  std::optional<double> b;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--alpha", f.alpha, "boundary slope alpha > 0")->required();
  cmd->add_option("--beta", f.beta, "boundary offset beta >= 0");
  cmd->add_option("--a", f.a, "explicit constant a (a^2 = h'(pi/2)); overrides solving");
  cmd->add_option("--b", f.b, "explicit constant b = g'(pi/2); requires --a");
}

// Explicit constants take precedence over the (alpha, beta) solve.
StripMapParams resolve_params(const ParamFlags& f) {
  if (f.b && !f.a) throw UsageError("--b requires --a");
  if (f.a) {
    const double b = f.b ? *f.b : solve_b(f.alpha, *f.a);
    StripMapParams p = derive_params(f.alpha, *f.a, b);
    p.beta = f.beta ? *f.beta : 2 * eval_h(p, kPi / 2);
    return p;
  }
  if (!f.beta) throw UsageError("either --beta or --a must be given");
  return solve_params(f.alpha, *f.beta);
}

void print_text(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

json params_json(const StripMapParams& p) {
  json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta ? json(*p.beta) : json(nullptr);
  j["a"] = p.a;
  j["b"] = p.b;
  j["c"] = p.c;
  j["w"] = p.w;
  j["lambda"] = p.lambda;
  j["m"] = p.m;
  j["K"] = elliptic::ellint_K(p.parameter());
  return j;
}

json report_json(const VerifyReport& r) {
  json j;
  j["check"] = r.check_name;
  j["grid"] = r.grid_spec;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  return j;
}

int cmd_solve(const ParamFlags& f, bool as_json, std::ostream& out) {
  if (!f.beta) throw UsageError("solve requires --beta");
  const SolveReport report = solve_a(f.alpha, *f.beta);
  StripMapParams p = derive_params(f.alpha, report.a, report.b);
  p.beta = *f.beta;

  if (as_json) {
    json j = params_json(p);
    j["residual_K"] = report.residual_K;
    j["residual_beta"] = report.residual_beta;
    j["iterations"] = report.iterations;
    j["converged"] = report.converged;
    out << j.dump(2) << '\n';
  } else {
    print_text(out, {{"alpha", fmt17(p.alpha)},
                     {"beta", fmt17(*p.beta)},
                     {"a", fmt17(p.a)},
                     {"b", fmt17(p.b)},
                     {"c", fmt17(p.c)},
                     {"w", fmt17(p.w)},
                     {"lambda", fmt17(p.lambda)},
                     {"m", fmt17(p.m)},
                     {"K", fmt17(elliptic::ellint_K(p.parameter()))},
                     {"residual_K", fmt17(report.residual_K)},
                     {"residual_beta", fmt17(report.residual_beta)},
                     {"iterations", std::to_string(report.iterations)},
                     {"converged", report.converged ? "true" : "false"}});
  }
  return report.converged ? kSuccess : kNotConverged;
}

int cmd_eval(const ParamFlags& f, double x, double y, bool derivatives, bool as_json, std::ostream& out) {
  const StripMapParams p = resolve_params(f);
  const MapValue v = eval_map(p, x, y);
  if (as_json) {
    json j;
    j["x"] = x;
    j["y"] = y;
    j["R"] = v.R;
    j["S"] = v.S;
    if (derivatives) {
      j["g_prime"] = eval_g_prime(p, y);
      j["h_prime"] = eval_h_prime(p, y);
    }
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"R", fmt17(v.R)}, {"S", fmt17(v.S)}};
    if (derivatives) {
      rows.emplace_back("g_prime", fmt17(eval_g_prime(p, y)));
      rows.emplace_back("h_prime", fmt17(eval_h_prime(p, y)));
    }
    print_text(out, rows);
  }
  return kSuccess;
}

struct GridFlags {
  double x_min = -1, x_max = 1;
  double y_min = 0, y_max = kPi;
  int nx = 2, ny = 2;
};

int cmd_grid(const ParamFlags& f, const GridFlags& g, std::ostream& out) {
  if (g.nx < 2 || g.ny < 2) throw UsageError("grid: --nx and --ny must be >= 2");
  if (!(g.y_min >= 0 && g.y_max <= kPi && g.y_min <= g.y_max))
    throw UsageError("grid: y range must satisfy 0 <= y-min <= y-max <= pi");
  if (!std::isfinite(g.x_min) || !std::isfinite(g.x_max)) throw UsageError("grid: x range must be finite");

  const StripMapParams p = resolve_params(f);
  const auto xs = linspace(g.x_min, g.x_max, g.nx);
  const auto ys = linspace(g.y_min, g.y_max, g.ny);
  out << "x,y,R,S,g_prime,h_prime\n";
  for (double y : ys) {
    const MapSample s = sample_map(p, y);
    const std::string tail =
        fmt17(s.g) + ',' + fmt17(s.g_prime) + ',' + fmt17(s.h_prime) + '\n';
    for (double x : xs) {
      const double r = p.alpha * x + s.h;
      out << fmt17(x) << ',' << fmt17(y) << ',' << fmt17(r) << ',' << tail;
    }
  }
  return kSuccess;
}

int emit_verification(const std::vector<VerifyReport>& reports, json header, bool as_json, std::ostream& out) {
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (as_json) {
    json checks = json::array();
    for (const auto& r : reports) checks.push_back(report_json(r));
    header["checks"] = std::move(checks);
    header["passed"] = all;
    out << header.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : reports) width = std::max(width, r.check_name.size());
    for (const auto& r : reports) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.check_name << std::string(width - r.check_name.size() + 2, ' ')
          << "max_residual=" << fmt17(r.max_residual) << "  tolerance=" << fmt17(r.tolerance) << "  ["
          << r.grid_spec << "]\n";
    }
    out << (all ? "all checks passed" : "verification FAILED") << '\n';
  }
  return all ? kSuccess : kVerificationFailed;
}

int cmd_verify(const ParamFlags& f, bool wang, const VerifyTolerances& tol, bool as_json, std::ostream& out) {
  if (wang) {
    const double b = solve_wang_b(f.alpha);
    const WangParams p = make_wang_params(f.alpha, b);
    json header;
    header["family"] = "wang";
    header["alpha"] = p.alpha;
    header["b"] = p.b;
    header["m"] = p.m;
    return emit_verification(verify_wang_map(p, tol), std::move(header), as_json, out);
  }
  const StripMapParams p = resolve_params(f);
  json header{{"family", "strip"}};
  header.update(params_json(p));
  return emit_verification(verify_strip_map(p, tol), std::move(header), as_json, out);
}

int cmd_wang(double alpha, int samples, bool as_json, std::ostream& out) {
  if (samples < 2) throw UsageError("wang: --samples must be >= 2");
  const double b = solve_wang_b(alpha);
  const WangParams p = make_wang_params(alpha, b);
  const auto ys = linspace(0.0, kPi, samples);
  if (as_json) {
    json j;
    j["alpha"] = p.alpha;
    j["b"] = p.b;
    j["m"] = p.m;
    j["K"] = elliptic::ellint_K(p.parameter());
    j["residual_K"] = std::abs(p.quarter_period_defect);
    json rows = json::array();
    for (double y : ys) rows.push_back(json{{"y", y}, {"g", wang_g(p, y)}});
    j["samples"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    print_text(out, {{"alpha", fmt17(p.alpha)},
                     {"b", fmt17(p.b)},
                     {"m", fmt17(p.m)},
                     {"K", fmt17(elliptic::ellint_K(p.parameter()))},
                     {"residual_K", fmt17(std::abs(p.quarter_period_defect))}});
    out << "y,g\n";
    for (double y : ys) out << fmt17(y) << ',' << fmt17(wang_g(p, y)) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form harmonic maps between hyperbolic strips"};
  app.require_subcommand(1);
  bool timed = false;
  app.add_flag("--timed", timed, "report elapsed wall time on stderr");

  ParamFlags params;
  bool as_json = false;

  auto* solve = app.add_subcommand("solve", "solve the boundary constants a, b for (alpha, beta)");
  add_param_flags(solve, params);
  solve->add_flag("--json", as_json, "emit JSON");

  double x = 0, y = 0;
  bool derivatives = false;
  auto* eval = app.add_subcommand("eval", "evaluate (R, S) at one point");
  add_param_flags(eval, params);
  eval->add_option("--x", x, "abscissa")->required();
  eval->add_option("--y", y, "ordinate in [0, pi]")->required();
  eval->add_flag("--derivatives", derivatives, "also print g' and h'");
  eval->add_flag("--json", as_json, "emit JSON");

  GridFlags grid_flags;
  auto* grid = app.add_subcommand("grid", "emit the map on a grid as CSV");
  add_param_flags(grid, params);
  grid->add_option("--x-min", grid_flags.x_min);
  grid->add_option("--x-max", grid_flags.x_max);
  grid->add_option("--y-min", grid_flags.y_min);
  grid->add_option("--y-max", grid_flags.y_max);
  grid->add_option("--nx", grid_flags.nx);
  grid->add_option("--ny", grid_flags.ny);

  bool wang_mode = false;
  VerifyTolerances tol;
  auto* verify = app.add_subcommand("verify", "run every numerical check; exit 0 iff all pass");
  add_param_flags(verify, params);
  verify->add_flag("--wang", wang_mode, "verify the beta = 0 family g = arccot(cs(alpha y | 1 - (b/alpha)^2))");
  verify->add_option("--ode-tol", tol.ode);
  verify->add_option("--pde-tol", tol.pde);
  verify->add_option("--shoot-tol", tol.shooting);
  verify->add_option("--quad-tol", tol.quadrature_z);
  verify->add_flag("--json", as_json, "emit JSON");

  double wang_alpha = 1;
  int wang_samples = 9;
  auto* wang = app.add_subcommand("wang", "solve and sample the beta = 0 family");
  wang->add_option("--alpha", wang_alpha, "alpha >= 1")->required();
  wang->add_option("--samples", wang_samples, "number of sample ordinates on [0, pi]");
  wang->add_flag("--json", as_json, "emit JSON");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kSuccess;
  try {
    if (*solve)
      status = cmd_solve(params, as_json, out);
    else if (*eval)
      status = cmd_eval(params, x, y, derivatives, as_json, out);
    else if (*grid)
      status = cmd_grid(params, grid_flags, out);
    else if (*verify)
      status = cmd_verify(params, wang_mode, tol, as_json, out);
    else if (*wang)
      status = cmd_wang(wang_alpha, wang_samples, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    status = kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    status = kUsageError;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    status = kUsageError;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (residual " << fmt17(e.residual()) << ")\n";
    status = kNotConverged;
  }
  if (timed) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    err << "elapsed " << fmt17(elapsed.count()) << " s\n";
  }
  return status;
}

}  // namespace hstrip::cli
