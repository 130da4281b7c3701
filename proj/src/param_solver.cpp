#include "hstrip/param_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hstrip/elliptic.hpp"
#include "hstrip/errors.hpp"
#include "hstrip/numerics.hpp"

namespace hstrip {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuadratureTolerance = 1e-13;
constexpr double kCrossCheckTolerance = 1e-9;
constexpr double kMaxA = 1 << 20;

class BeyondDoubleRange : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

void require_constants(double alpha, double a, double b, const char* who) {
  if (!(alpha > 0) || !(a >= 0) || !(b > 0) || !std::isfinite(alpha) || !std::isfinite(a) ||
      !std::isfinite(b))
    throw DomainError(std::string(who) + ": requires alpha > 0, a >= 0, b > 0");
}

double quartic_c2(double alpha, double a, double b) { return alpha * alpha + b * b + a * a * a * a; }

double two_h_half(double alpha, double a) {
  const double b = solve_b(alpha, a);
  return 2 * eval_h(derive_params(alpha, a, b), kPi / 2);
}

}  // namespace

double quarter_period_residual(double alpha, double a, double b) {
  require_constants(alpha, a, b, "quarter_period_residual");
  try {
    return derive_params(alpha, a, b).quarter_period_defect;
  } catch (const DomainError&) {
    return kInf;  // cos(lambda) underflow: m rounds to 1 and K diverges
  }
}

double quarter_period_integral(double alpha, double a, double b) {
  require_constants(alpha, a, b, "quarter_period_integral");
  const double c2 = quartic_c2(alpha, a, b);
  const double value = numerics::integrate_half_line(
      [=](double z) { return 1 / std::sqrt((alpha * alpha * z * z + c2) * z * z + b * b); },
      [=](double t) { return 1 / std::sqrt(alpha * alpha + (c2 + b * b * t * t) * t * t); },
      kQuadratureTolerance);

  const StripMapParams p = derive_params(alpha, a, b);
  const double closed = elliptic::ellint_K(p.parameter()) / p.argument_scale();
  if (std::abs(value - closed) > kCrossCheckTolerance)
    throw ConvergenceError("quarter_period_integral: quadrature disagrees with K(m)/(alpha w)",
                           std::abs(value - closed));
  return value;
}

double solve_b(double alpha, double a) {
  if (!(alpha > 0) || !(a >= 0) || !std::isfinite(alpha) || !std::isfinite(a))
    throw DomainError("solve_b: requires alpha > 0, a >= 0");

  const double hi = std::max(2 * alpha, 1 / alpha);
  auto residual = [=](double b) { return quarter_period_residual(alpha, a, b); };
  const double r_hi = residual(hi);
  if (r_hi > 0)
    throw ConvergenceError("solve_b: no sign change of K(m) - alpha w pi/2 on (0, max{2 alpha, 1/alpha}]",
                           r_hi);
  // Large a pushes the root towards 0 faster than 200 halvings of (0, hi]
  // can follow, so first narrow the bracket geometrically.
  double lo = hi / 16, r_lo = residual(lo), top = hi, r_top = r_hi;
  while (lo > 0 && r_lo <= 0) {
    top = lo;
    r_top = r_lo;
    lo /= 16;
    r_lo = lo > 0 ? residual(lo) : kInf;
  }
  const auto result = numerics::bisect(residual, lo, r_lo, top, r_top, 0.0, kMaxBisectionIterations);
  const double r = std::abs(residual(result.root));
  if (!result.converged || r > kQuarterPeriodTolerance) {
    auto underflows = [&](double b) {
      try {
        return derive_params(alpha, a, b).m_complement < 1e-290;
      } catch (const DomainError&) {
        return true;
      }
    };
    // The bracket collapsed onto the point where cos(lambda) underflows: the
    // root needs a complementary parameter below the double range.
    if (underflows(result.root))
      throw BeyondDoubleRange("solve_b: root lies beyond double precision (1 - m underflows); a is too large", r);
    throw ConvergenceError("solve_b: quarter-period residual above tolerance", r);
  }
  return result.root;
}

double midline_offset_integral(double alpha, double a, double b) {
  require_constants(alpha, a, b, "midline_offset_integral");
  if (a == 0) return 0.0;
  const double c2 = quartic_c2(alpha, a, b);
  // With z = 1/t the (1 + z^2) factor contributes t^2 / (1 + t^2).
  const double integral = numerics::integrate_half_line(
      [=](double z) {
        return 1 / ((1 + z * z) * std::sqrt((alpha * alpha * z * z + c2) * z * z + b * b));
      },
      [=](double t) {
        return t * t / ((1 + t * t) * std::sqrt(alpha * alpha + (c2 + b * b * t * t) * t * t));
      },
      kQuadratureTolerance);
  const double value = a * a * integral;

  const StripMapParams p = derive_params(alpha, a, b);
  const double k = elliptic::ellint_K(p.parameter());
  const double closed = a * a * elliptic::ellint_Pi_arg_reduced(p.characteristic(), k, p.parameter()) /
                        (p.alpha * p.w * p.w * p.w);
  if (std::abs(value - closed) > kCrossCheckTolerance)
    throw ConvergenceError("midline_offset_integral: quadrature disagrees with the third-kind closed form",
                           std::abs(value - closed));
  return value;
}

SolveReport solve_a(double alpha, double beta) {
  if (!(alpha > 0) || !(beta >= 0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("solve_a: requires alpha > 0, beta >= 0");

  SolveReport report;
  report.alpha = alpha;
  report.beta = beta;

  double a = 0;
  if (beta > 0) {
    // A trial a whose b falls outside double range is taken as overshooting:
    // h(pi/2) grows with a, and such a lie above every representable root.
    auto mismatch = [=](double trial) {
      try {
        return two_h_half(alpha, trial) - beta;
      } catch (const BeyondDoubleRange&) {
        return kInf;
      }
    };
    double hi = 1;
    double f_hi = mismatch(hi);
    while (f_hi < 0) {
      if (hi >= kMaxA)
        throw ConvergenceError("solve_a: beta lies beyond the search range for a", -f_hi);
      hi *= 2;
      f_hi = mismatch(hi);
    }
    const auto result = numerics::bisect(mismatch, 0.0, -beta, hi, f_hi, 0.0, kMaxBisectionIterations);
    a = result.root;
    report.iterations = result.iterations;
    report.converged = result.converged;
  } else {
    report.converged = true;
  }

  report.a = a;
  report.b = solve_b(alpha, a);
  const StripMapParams p = derive_params(alpha, a, report.b);
  report.residual_K = std::abs(p.quarter_period_defect);
  report.residual_beta = std::abs(2 * eval_h(p, kPi / 2) - beta);
  report.converged = report.converged && report.residual_K <= kQuarterPeriodTolerance &&
                     report.residual_beta <= kBetaTolerance;
  return report;
}

StripMapParams solve_params(double alpha, double beta) {
  const SolveReport report = solve_a(alpha, beta);
  if (!report.converged)
    throw ConvergenceError("solve_params: boundary constants did not converge",
                           std::max(report.residual_K, report.residual_beta));
  StripMapParams p = derive_params(alpha, report.a, report.b);
  p.beta = beta;
  return p;
}

double solve_wang_b(double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("solve_wang_b: alpha must be > 0");
  if (alpha < 1)
    throw DomainError("solve_wang_b: no solution for alpha < 1, since K(m) >= pi/2 > alpha pi/2 for every m in [0, 1)");
  if (alpha == 1) return 1.0;

  auto residual = [=](double b) {
    const double ratio = b / alpha;
    const double mc = ratio * ratio;
    if (!(mc > 0)) return kInf;
    return elliptic::ellint_K(elliptic::EllipticParameter::from_complement(mc)) - alpha * kPi / 2;
  };
  const auto result =
      numerics::bisect(residual, 0.0, kInf, alpha, residual(alpha), 0.0, kMaxBisectionIterations);
  const double r = std::abs(residual(result.root));
  if (!result.converged || r > kQuarterPeriodTolerance)
    throw ConvergenceError("solve_wang_b: quarter-period residual above tolerance", r);
  return result.root;
}

}  // namespace hstrip
