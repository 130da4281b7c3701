#include "hstrip/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>

#include "hstrip/errors.hpp"

namespace hstrip::numerics {

double integrate(const RealFunction& f, double lo, double hi, double abs_tol) {
  if (lo == hi) return 0.0;
  // gauss_kronrod's tolerance is relative to the L1 norm; scale it so the
  // absolute request is honored for small integrals as well.
  double error = 0;
  double l1 = 0;
  const double coarse =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 0, 0.0, &error, &l1);
  const double rel_tol = l1 > 0 ? std::min(1e-14, abs_tol / l1) : 1e-14;
  if (error <= abs_tol) return coarse;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 30, rel_tol, &error);
}

double integrate_half_line(const RealFunction& f, const RealFunction& tail, double abs_tol) {
  return integrate(f, 0.0, 1.0, abs_tol / 2) + integrate(tail, 0.0, 1.0, abs_tol / 2);
}

BisectionResult bisect(const RealFunction& f, double lo, double hi, double x_tol, int max_iterations) {
  return bisect(f, lo, f(lo), hi, f(hi), x_tol, max_iterations);
}

BisectionResult bisect(const RealFunction& f, double lo, double f_lo, double hi, double f_hi,
                       double x_tol, int max_iterations) {
  if (std::isnan(f_lo) || std::isnan(f_hi) || std::signbit(f_lo) == std::signbit(f_hi)) {
    if (f_lo == 0) return {lo, 0, true};
    if (f_hi == 0) return {hi, 0, true};
    throw ConvergenceError("bisect: the interval does not bracket a sign change",
                           std::min(std::abs(f_lo), std::abs(f_hi)));
  }
  const bool lo_negative = std::signbit(f_lo);
  int it = 0;
  while (it < max_iterations) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) return {mid, it, true};
    ++it;
    const double fm = f(mid);
    if (fm == 0) return {mid, it, true};
    if (std::signbit(fm) == lo_negative)
      lo = mid;
    else
      hi = mid;
  }
  return {lo + (hi - lo) / 2, it, false};
}

State4 rk4(const Derivative4& rhs, double t0, const State4& y0, double t1, int steps) {
  if (steps <= 0) throw DomainError("rk4: step count must be positive");
  const double h = (t1 - t0) / steps;
  State4 y = y0;
  auto axpy = [](const State4& base, double s, const State4& k) {
    State4 r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = base[i] + s * k[i];
    return r;
  };
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    const State4 k1 = rhs(t, y);
    const State4 k2 = rhs(t + h / 2, axpy(y, h / 2, k1));
    const State4 k3 = rhs(t + h / 2, axpy(y, h / 2, k2));
    const State4 k4 = rhs(t + h, axpy(y, h, k3));
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
  }
  return y;
}

}  // namespace hstrip::numerics
