#pragma once

#include <array>
#include <functional>

namespace hstrip::numerics {

using RealFunction = std::function<double(double)>;

/// Adaptive Gauss-Kronrod quadrature of f over [lo, hi] to the given
/// absolute tolerance.
double integrate(const RealFunction& f, double lo, double hi, double abs_tol = 1e-13);

/// integral_0^inf f(z) dz, split at z = 1 with the tail mapped by z -> 1/t
/// onto (0, 1].  `tail` must return f(1/t)/t^2, supplied separately so that
/// callers can write it without the 0 * inf that a generic rewrite produces
/// at t = 0.
double integrate_half_line(const RealFunction& f, const RealFunction& tail, double abs_tol = 1e-13);

struct BisectionResult {
  double root;
  int iterations;
  bool converged;
};

/// Bisection for a sign change of f on [lo, hi].  Requires f(lo) and f(hi)
/// of opposite sign (checked; infinities count with their sign).  Stops once
/// the bracket is no wider than `x_tol` or cannot be split further in
/// double precision, or after `max_iterations`.
BisectionResult bisect(const RealFunction& f, double lo, double hi, double x_tol = 0.0,
                       int max_iterations = 200);

/// Same, with the endpoint values already known.
BisectionResult bisect(const RealFunction& f, double lo, double f_lo, double hi, double f_hi,
                       double x_tol = 0.0, int max_iterations = 200);

/// State of a first-order system of dimension 4.
using State4 = std::array<double, 4>;
using Derivative4 = std::function<State4(double, const State4&)>;

/// Classical fourth-order Runge-Kutta from t0 to t1 with a fixed number of
/// equal steps (t1 < t0 is allowed).
State4 rk4(const Derivative4& rhs, double t0, const State4& y0, double t1, int steps);

}  // namespace hstrip::numerics
