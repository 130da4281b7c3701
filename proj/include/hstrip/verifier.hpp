#pragma once

// Numerical certificates for the closed forms.  The oracles here use only
// quadrature of the defining integrals, finite differences and Runge-Kutta
// integration; none of them touches the Landen/Carlson evaluation except
// through the closed-form values being checked.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hstrip/map_family.hpp"

namespace hstrip {

/// Residual grids keep this distance from the strip boundary, where cot(g)
/// is unbounded.
inline constexpr double kBoundaryStandoff = 0.05;

struct VerifyTolerances {
  double ode = 1e-5;
  double first_order_h = 1e-9;
  double first_order_g = 1e-8;
  double first_integral = 1e-9;
  double pde = 1e-4;
  double quadrature_z = 1e-8;  // relative to max(1, |z|)
  double shooting = 1e-7;
  double derivative = 1e-6;    // relative
  double z_equation = 1e-8;    // relative to 1 + z^4
  double symmetry = 1e-10;
};

struct VerifyReport {
  std::string check_name;
  std::string grid_spec;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = false;
};

/// Evenly spaced grid of n >= 2 points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int n);

/// Residuals of h'' - 2 cot(g) g' h' and g'' + cot(g)(alpha^2 + h'^2 - g'^2),
/// with second derivatives by central differences of the closed-form g', h'.
/// DomainError if the grid leaves [0.05, pi - 0.05].
VerifyReport ode_residuals(const StripMapParams& p, std::span<const double> grid, double tolerance = 1e-5);

/// Residual of g'' + cot(g)(alpha^2 - g'^2) and of the first integral
/// (g')^2 - alpha^2 = (b^2 - alpha^2) sin^2 g.  Returns both reports.
std::vector<VerifyReport> wang_ode_residual(const WangParams& p, std::span<const double> grid,
                                            double ode_tolerance = 1e-5,
                                            double first_integral_tolerance = 1e-9);

/// The two residuals of the full system at one point, with a five-point
/// Laplacian and central gradients of step `step`.
std::pair<double, double> pde_residual_at(const StripMapParams& p, double x, double y, double step);

/// max over x_grid x y_grid of pde_residual_at.  step in [1e-6, 1e-3].
VerifyReport pde_residuals(const StripMapParams& p, std::span<const double> x_grid,
                           std::span<const double> y_grid, double step = 1e-3, double tolerance = 1e-4);

/// Solves integral_0^z dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2) = pi/2 - y for
/// z by bisection over adaptive quadrature.  y in (0, pi/2].
double quadrature_z_oracle(const StripMapParams& p, double y);

/// Fourth-order Runge-Kutta integration of the second-order system outward
/// from y = pi/2 with data g = pi/2, g' = b, h = beta/2, h' = a^2.  Requires
/// beta; grid inside [0.05, pi - 0.05]; samples returned in grid order.
std::vector<MapSample> ode_shoot_oracle(const StripMapParams& p, std::span<const double> y_grid,
                                        double max_step = 1e-4);

/// Checks the first-order system h' = a^2 sin^2 g and
/// (g')^2 = alpha^2 + (b^2 + a^4 - alpha^2) sin^2 g - a^4 sin^4 g, one report each.
std::vector<VerifyReport> first_order_residuals(const StripMapParams& p, std::span<const double> grid,
                                                double h_tolerance = 1e-9, double g_tolerance = 1e-8);

/// Checks (z')^2 = alpha^2 z^4 + c^2 z^2 + b^2, scaled by 1 + z^4.
VerifyReport z_equation_residual(const StripMapParams& p, std::span<const double> grid,
                                 double tolerance = 1e-8);

/// Finite differences of eval_g, eval_h against eval_g_prime, eval_h_prime.
VerifyReport derivative_consistency(const StripMapParams& p, std::span<const double> grid,
                                    double tolerance = 1e-6);

/// Max over the grid of |quadrature_z_oracle - eval_z| / max(1, |z|); grid in (0, pi/2].
VerifyReport quadrature_z_check(const StripMapParams& p, std::span<const double> grid,
                                double tolerance = 1e-8);

/// Max over the grid of the g and h differences between shooting and closed form.
VerifyReport shooting_check(const StripMapParams& p, std::span<const double> grid, double tolerance = 1e-7);

/// |g(y) + g(pi - y) - pi| and |h(y) + h(pi - y) - beta|.  Requires beta.
VerifyReport symmetry_check(const StripMapParams& p, std::span<const double> grid, double tolerance = 1e-10);

/// Every strip-map check on the standard interior grids.
std::vector<VerifyReport> verify_strip_map(const StripMapParams& p, const VerifyTolerances& tol = {});

/// Wang-family checks plus exact boundary values.
std::vector<VerifyReport> verify_wang_map(const WangParams& p, const VerifyTolerances& tol = {});

}  // namespace hstrip
