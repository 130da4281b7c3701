#include "hstrip/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "hstrip/errors.hpp"
#include "hstrip/numerics.hpp"

namespace hstrip {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSecondDifferenceStep = 1e-5;
constexpr double kDerivativeStep = 1e-5;

std::string describe_grid(std::span<const double> grid) {
  if (grid.empty()) return "empty";
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu points in [%.6g, %.6g]", grid.size(), *lo, *hi);
  return buf;
}

void require_interior(std::span<const double> grid, const char* who) {
  for (double y : grid) {
    if (!(y >= kBoundaryStandoff && y <= kPi - kBoundaryStandoff))
      throw DomainError(std::string(who) + ": grid point " + std::to_string(y) +
                        " is closer than 0.05 to the strip boundary");
  }
}

VerifyReport make_report(std::string name, std::string grid, double max_residual, double tolerance) {
  return {std::move(name), std::move(grid), max_residual, tolerance, max_residual <= tolerance};
}

double cot(double g) { return std::cos(g) / std::sin(g); }

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw DomainError("linspace: need at least two points");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

VerifyReport ode_residuals(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  require_interior(grid, "ode_residuals");
  const double s = kSecondDifferenceStep;
  double worst = 0;
  for (double y : grid) {
    const double g = eval_g(p, y);
    const double gp = eval_g_prime(p, y);
    const double hp = eval_h_prime(p, y);
    const double gpp = (eval_g_prime(p, y + s) - eval_g_prime(p, y - s)) / (2 * s);
    const double hpp = (eval_h_prime(p, y + s) - eval_h_prime(p, y - s)) / (2 * s);
    const double ct = cot(g);
    const double r_h = hpp - 2 * ct * gp * hp;
    const double r_g = gpp + ct * (p.alpha * p.alpha + hp * hp - gp * gp);
    worst = std::max({worst, std::abs(r_h), std::abs(r_g)});
  }
  return make_report("ode_residuals", describe_grid(grid), worst, tolerance);
}

std::vector<VerifyReport> wang_ode_residual(const WangParams& p, std::span<const double> grid,
                                            double ode_tolerance, double first_integral_tolerance) {
  require_interior(grid, "wang_ode_residual");
  const double s = kSecondDifferenceStep;
  const double a2 = p.alpha * p.alpha;
  double worst_ode = 0;
  double worst_integral = 0;
  for (double y : grid) {
    const double g = wang_g(p, y);
    const double gp = wang_g_prime(p, y);
    const double gpp = (wang_g_prime(p, y + s) - wang_g_prime(p, y - s)) / (2 * s);
    const double sg = std::sin(g);
    worst_ode = std::max(worst_ode, std::abs(gpp + cot(g) * (a2 - gp * gp)));
    worst_integral = std::max(worst_integral, std::abs(gp * gp - a2 - (p.b * p.b - a2) * sg * sg));
  }
  const std::string spec = describe_grid(grid);
  return {make_report("wang_ode", spec, worst_ode, ode_tolerance),
          make_report("wang_first_integral", spec, worst_integral, first_integral_tolerance)};
}

std::pair<double, double> pde_residual_at(const StripMapParams& p, double x, double y, double step) {
  // R is assembled in extended precision, with the x offsets added there
  // rather than rounded into x +- step, so that the alpha x term does not
  // feed x-dependent rounding into the differences.
  using ld = long double;
  const ld s = step;
  auto R = [&](ld dx, double yy) {
    return static_cast<ld>(p.alpha) * (static_cast<ld>(x) + dx) + static_cast<ld>(eval_h(p, yy));
  };
  auto S = [&](ld, double yy) { return static_cast<ld>(eval_g(p, yy)); };

  const ld r0 = R(0, y), s0 = S(0, y);
  const ld r_e = R(s, y), r_w = R(-s, y), r_n = R(0, y + step), r_s = R(0, y - step);
  const ld s_e = S(s, y), s_w = S(-s, y), s_n = S(0, y + step), s_s = S(0, y - step);

  const ld lap_r = (((r_e - r0) + (r_w - r0)) + ((r_n - r0) + (r_s - r0))) / (s * s);
  const ld lap_s = (((s_e - s0) + (s_w - s0)) + ((s_n - s0) + (s_s - s0))) / (s * s);
  const ld rx = (r_e - r_w) / (2 * s), ry = (r_n - r_s) / (2 * s);
  const ld sx = (s_e - s_w) / (2 * s), sy = (s_n - s_s) / (2 * s);
  const ld ct = std::cos(static_cast<double>(s0)) / std::sin(static_cast<double>(s0));

  const ld res_r = lap_r - 2 * ct * (rx * sx + ry * sy);
  const ld res_s = lap_s + ct * ((rx * rx + ry * ry) - (sx * sx + sy * sy));
  return {static_cast<double>(res_r), static_cast<double>(res_s)};
}

VerifyReport pde_residuals(const StripMapParams& p, std::span<const double> x_grid,
                           std::span<const double> y_grid, double step, double tolerance) {
  if (!(step >= 1e-6 && step <= 1e-3)) throw DomainError("pde_residuals: step must lie in [1e-6, 1e-3]");
  require_interior(y_grid, "pde_residuals");
  double worst = 0;
  for (double y : y_grid) {
    for (double x : x_grid) {
      const auto [r1, r2] = pde_residual_at(p, x, y, step);
      worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
  }
  return make_report("pde_residuals", "x: " + describe_grid(x_grid) + "; y: " + describe_grid(y_grid),
                     worst, tolerance);
}

double quadrature_z_oracle(const StripMapParams& p, double y) {
  if (!(y > 0 && y <= kPi / 2)) throw DomainError("quadrature_z_oracle: y must lie in (0, pi/2]");
  const double target = kPi / 2 - y;
  if (target == 0) return 0.0;

  const double a2 = p.alpha * p.alpha;
  const double c2 = p.c * p.c;
  const double b2 = p.b * p.b;
  auto integrand = [=](double z) { return 1 / std::sqrt((a2 * z * z + c2) * z * z + b2); };
  auto tail = [=](double t) { return 1 / std::sqrt(a2 + (c2 + b2 * t * t) * t * t); };
  const double head = numerics::integrate(integrand, 0.0, 1.0, 1e-14);
  auto integral_to = [&](double z) {
    if (z <= 1) return numerics::integrate(integrand, 0.0, z, 1e-14);
    return head + numerics::integrate(tail, 1 / z, 1.0, 1e-14);
  };

  double hi = 1;
  double f_hi = integral_to(hi) - target;
  while (f_hi < 0) {
    if (hi > 1e12) throw ConvergenceError("quadrature_z_oracle: cannot bracket z(y)", -f_hi);
    hi *= 2;
    f_hi = integral_to(hi) - target;
  }
  const auto result = numerics::bisect([&](double z) { return integral_to(z) - target; }, 0.0, -target, hi,
                                       f_hi, 0.0, 200);
  if (!result.converged) throw ConvergenceError("quadrature_z_oracle: bisection did not converge", hi);
  return result.root;
}

std::vector<MapSample> ode_shoot_oracle(const StripMapParams& p, std::span<const double> y_grid,
                                        double max_step) {
  require_interior(y_grid, "ode_shoot_oracle");
  if (!p.beta) throw DomainError("ode_shoot_oracle: beta must be known");
  if (!(max_step > 0)) throw DomainError("ode_shoot_oracle: step must be positive");

  // State (g, g', h, h').
  const double alpha2 = p.alpha * p.alpha;
  const numerics::Derivative4 rhs = [=](double, const numerics::State4& s) {
    const double ct = std::cos(s[0]) / std::sin(s[0]);
    return numerics::State4{s[1], -ct * (alpha2 + s[3] * s[3] - s[1] * s[1]), s[3], 2 * ct * s[1] * s[3]};
  };
  const numerics::State4 mid{kPi / 2, p.b, *p.beta / 2, p.a * p.a};

  std::vector<MapSample> out(y_grid.size());
  std::vector<std::size_t> order(y_grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return y_grid[i] < y_grid[j]; });

  auto march = [&](auto first, auto last) {
    double t = kPi / 2;
    numerics::State4 state = mid;
    for (auto it = first; it != last; ++it) {
      const double target = y_grid[*it];
      const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(target - t) / max_step)));
      if (target != t) state = numerics::rk4(rhs, t, state, target, steps);
      t = target;
      out[*it] = {target, state[0], state[2], state[1], state[3]};
    }
  };
  const auto split = std::partition_point(order.begin(), order.end(),
                                          [&](std::size_t i) { return y_grid[i] < kPi / 2; });
  march(std::make_reverse_iterator(split), order.rend());
  march(split, order.end());
  return out;
}

std::vector<VerifyReport> first_order_residuals(const StripMapParams& p, std::span<const double> grid,
                                                double h_tolerance, double g_tolerance) {
  const double a2 = p.a * p.a;
  const double a4 = a2 * a2;
  const double alpha2 = p.alpha * p.alpha;
  double worst_h = 0;
  double worst_g = 0;
  for (double y : grid) {
    const double sg = std::sin(eval_g(p, y));
    const double s2 = sg * sg;
    const double gp = eval_g_prime(p, y);
    worst_h = std::max(worst_h, std::abs(eval_h_prime(p, y) - a2 * s2));
    worst_g = std::max(worst_g, std::abs(gp * gp - (alpha2 + (p.b * p.b + a4 - alpha2) * s2 - a4 * s2 * s2)));
  }
  const std::string spec = describe_grid(grid);
  return {make_report("first_order_h", spec, worst_h, h_tolerance),
          make_report("first_order_g", spec, worst_g, g_tolerance)};
}

VerifyReport z_equation_residual(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  const double a2 = p.alpha * p.alpha;
  const double c2 = p.c * p.c;
  const double b2 = p.b * p.b;
  double worst = 0;
  for (double y : grid) {
    const double z = eval_z(p, y);
    const double zp = eval_z_prime(p, y);
    const double z2 = z * z;
    worst = std::max(worst, std::abs(zp * zp - ((a2 * z2 + c2) * z2 + b2)) / (1 + z2 * z2));
  }
  return make_report("z_equation", describe_grid(grid), worst, tolerance);
}

VerifyReport derivative_consistency(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  const double s = kDerivativeStep;
  double worst = 0;
  for (double y : grid) {
    const double fd_g = (eval_g(p, y + s) - eval_g(p, y - s)) / (2 * s);
    const double gp = eval_g_prime(p, y);
    worst = std::max(worst, std::abs(fd_g - gp) / std::abs(gp));
    if (p.a > 0) {
      const double fd_h = (eval_h(p, y + s) - eval_h(p, y - s)) / (2 * s);
      const double hp = eval_h_prime(p, y);
      worst = std::max(worst, std::abs(fd_h - hp) / std::abs(hp));
    }
  }
  return make_report("derivative_consistency", describe_grid(grid), worst, tolerance);
}

VerifyReport quadrature_z_check(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  double worst = 0;
  for (double y : grid) {
    const double z = eval_z(p, y);
    worst = std::max(worst, std::abs(quadrature_z_oracle(p, y) - z) / std::max(1.0, std::abs(z)));
  }
  return make_report("quadrature_z", describe_grid(grid), worst, tolerance);
}

VerifyReport shooting_check(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  const auto shot = ode_shoot_oracle(p, grid);
  double worst = 0;
  for (const MapSample& s : shot) {
    worst = std::max({worst, std::abs(s.g - eval_g(p, s.y)), std::abs(s.h - eval_h(p, s.y))});
  }
  return make_report("ode_shooting", describe_grid(grid), worst, tolerance);
}

VerifyReport symmetry_check(const StripMapParams& p, std::span<const double> grid, double tolerance) {
  if (!p.beta) throw DomainError("symmetry_check: beta must be known");
  double worst = 0;
  for (double y : grid) {
    const double mirror = kPi - y;
    worst = std::max({worst, std::abs(eval_g(p, y) + eval_g(p, mirror) - kPi),
                      std::abs(eval_h(p, y) + eval_h(p, mirror) - *p.beta)});
  }
  return make_report("symmetry", describe_grid(grid), worst, tolerance);
}

std::vector<VerifyReport> verify_strip_map(const StripMapParams& p, const VerifyTolerances& tol) {
  const auto interior = linspace(kBoundaryStandoff, kPi - kBoundaryStandoff, 100);
  const auto x_grid = linspace(-1.0, 1.0, 20);
  const auto y_grid = linspace(kBoundaryStandoff, kPi - kBoundaryStandoff, 20);
  const auto half = linspace(kBoundaryStandoff, kPi / 2, 10);
  const auto shoot = linspace(kBoundaryStandoff, kPi - kBoundaryStandoff, 41);

  std::vector<VerifyReport> out;
  out.push_back(ode_residuals(p, interior, tol.ode));
  for (auto& r : first_order_residuals(p, interior, tol.first_order_h, tol.first_order_g))
    out.push_back(std::move(r));
  out.push_back(z_equation_residual(p, interior, tol.z_equation));
  out.push_back(derivative_consistency(p, interior, tol.derivative));
  out.push_back(pde_residuals(p, x_grid, y_grid, 1e-3, tol.pde));
  out.push_back(quadrature_z_check(p, half, tol.quadrature_z));
  if (p.beta) {
    out.push_back(shooting_check(p, shoot, tol.shooting));
    out.push_back(symmetry_check(p, linspace(0.0, kPi, 200), tol.symmetry));
  }
  return out;
}

std::vector<VerifyReport> verify_wang_map(const WangParams& p, const VerifyTolerances& tol) {
  const auto interior = linspace(kBoundaryStandoff, kPi - kBoundaryStandoff, 100);
  std::vector<VerifyReport> out = wang_ode_residual(p, interior, tol.ode, tol.first_integral);

  const double boundary = std::max({std::abs(wang_g(p, 0.0)), std::abs(wang_g(p, kPi / 2) - kPi / 2),
                                    std::abs(wang_g(p, kPi) - kPi)});
  out.push_back(make_report("wang_boundary_values", "y in {0, pi/2, pi}", boundary, 0.0));

  // The beta = 0 strip system with a = 0 is the Wang equation; shoot it.
  StripMapParams strip = derive_params(p.alpha, 0.0, p.b);
  strip.beta = 0.0;
  const auto shoot = linspace(kBoundaryStandoff, kPi - kBoundaryStandoff, 41);
  double worst = 0;
  for (const MapSample& s : ode_shoot_oracle(strip, shoot)) worst = std::max(worst, std::abs(s.g - wang_g(p, s.y)));
  out.push_back(make_report("wang_shooting", describe_grid(shoot), worst, tol.shooting));
  return out;
}

}  // namespace hstrip
