#pragma once

// Boundary constants of the strip maps.  For fixed (alpha, a) the constant b
// is the unique root of K(m) = alpha w pi/2, equivalently
//
//   integral_0^inf dz / sqrt(alpha^2 z^4 + (alpha^2 + b^2 + a^4) z^2 + b^2) = pi/2,
//
// and a is then fixed by beta through
//
//   a^2 integral_0^inf dz / ((1 + z^2) sqrt(...)) = h(pi/2) = beta/2.

#include "hstrip/map_family.hpp"

namespace hstrip {

inline constexpr double kBetaTolerance = 1e-9;
inline constexpr int kMaxBisectionIterations = 200;

struct SolveReport {
  double alpha = 0;
  double beta = 0;
  double a = 0;
  double b = 0;
  double residual_K = 0;     // |K(m) - alpha w pi/2|
  double residual_beta = 0;  // |2 h(pi/2) - beta|
  int iterations = 0;        // outer bisection steps on a
  bool converged = false;
};

/// Signed K(m) - alpha w pi/2 for the parameters built from (alpha, a, b).
/// +infinity once cos(lambda) underflows (m rounds to 1).
double quarter_period_residual(double alpha, double a, double b);

/// Quadrature of integral_0^inf dz / sqrt(alpha^2 z^4 + c^2 z^2 + b^2).
/// Cross-checked against K(m)/(alpha w); ConvergenceError on disagreement.
double quarter_period_integral(double alpha, double a, double b);

/// The unique b > 0 with K(m) = alpha w pi/2, searched in (0, max{2 alpha, 1/alpha}].
double solve_b(double alpha, double a);

/// Quadrature of a^2 integral_0^inf dz / ((1 + z^2) sqrt(...)).
/// Cross-checked against the complete third-kind closed form.
double midline_offset_integral(double alpha, double a, double b);

/// a(alpha, beta) with b = solve_b(alpha, a).  Throws ConvergenceError when
/// the bracket on a cannot be established; otherwise the report carries the
/// converged flag.
SolveReport solve_a(double alpha, double beta);

/// Strip-map parameters for the boundary data (alpha, beta), beta attached.
/// Throws ConvergenceError when the solve does not converge.
StripMapParams solve_params(double alpha, double beta);

/// b in (0, alpha] with K(1 - (b/alpha)^2) = alpha pi/2.  Only solvable for
/// alpha >= 1 since K >= pi/2; DomainError otherwise.
double solve_wang_b(double alpha);

}  // namespace hstrip
