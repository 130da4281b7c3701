#include "hstrip/map_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hstrip/errors.hpp"

namespace hstrip {
namespace {

constexpr double kPi = std::numbers::pi;

void require_closed_strip(double y, const char* who) {
  if (!(y >= 0 && y <= kPi)) throw DomainError(std::string(who) + ": y must lie in [0, pi]");
}

// arccot with range (0, pi), continued past pi when sn turns negative just
// beyond the far boundary.
double arccot_of_ratio(double sn, double scaled_cn) {
  const double angle = std::atan2(sn, scaled_cn);
  return angle < 0 ? angle + 2 * kPi : angle;
}

}  // namespace

bool StripMapParams::boundary_matched() const {
  return std::abs(quarter_period_defect) <= kQuarterPeriodTolerance;
}

bool WangParams::boundary_matched() const {
  return std::abs(quarter_period_defect) <= kQuarterPeriodTolerance;
}

StripMapParams derive_params(double alpha, double a, double b) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("derive_params: alpha must be > 0");
  if (!(a >= 0) || !std::isfinite(a)) throw DomainError("derive_params: a must be >= 0");
  if (!(b > 0) || !std::isfinite(b)) throw DomainError("derive_params: b must be > 0");

  StripMapParams p;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  const double a4 = a * a * a * a;
  const double c2 = alpha * alpha + b * b + a4;
  p.c = std::sqrt(c2);

  // c^4 - 4 alpha^2 b^2 = ((alpha - b)^2 + a^4)(c^2 + 2 alpha b), both factors >= 0.
  if (a == 0 && b <= alpha) {
    p.w = 1;
  } else {
    const double disc = ((alpha - b) * (alpha - b) + a4) * (c2 + 2 * alpha * b);
    p.w = std::sqrt((c2 + std::sqrt(disc)) / (2 * alpha * alpha));
  }

  const double cos_lambda = std::min(1.0, b / (alpha * p.w * p.w));
  p.m_complement = cos_lambda * cos_lambda;
  if (!(p.m_complement > 0))
    throw DomainError("derive_params: cos(lambda) underflows; b is too small relative to alpha w^2");
  p.m = 1 - p.m_complement;
  p.lambda = std::atan2(std::sqrt(p.m), cos_lambda);
  p.quarter_period_defect = elliptic::ellint_K(p.parameter()) - p.argument_scale() * kPi / 2;
  return p;
}

WangParams make_wang_params(double alpha, double b) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("make_wang_params: alpha must be > 0");
  if (!(b > 0 && b <= alpha)) throw DomainError("make_wang_params: b must satisfy 0 < b <= alpha");
  WangParams p;
  p.alpha = alpha;
  p.b = b;
  const double ratio = b / alpha;
  p.m_complement = ratio * ratio;
  p.m = 1 - p.m_complement;
  p.quarter_period_defect = elliptic::ellint_K(p.parameter()) - alpha * kPi / 2;
  return p;
}

double eval_z(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_z");
  if (y == 0 || y == kPi) throw PoleError("eval_z: z is unbounded on the strip boundary");
  if (y == kPi / 2 && p.boundary_matched()) return 0.0;
  return p.w * elliptic::jacobi_ratio(elliptic::Letter::c, elliptic::Letter::s, p.argument_scale() * y,
                                      p.parameter());
}

double eval_z_prime(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_z_prime");
  const auto t = elliptic::jacobi_sn_cn_dn(p.argument_scale() * y, p.parameter());
  if (t.sn == 0) throw PoleError("eval_z_prime: z' is unbounded on the strip boundary");
  return -p.alpha * p.w * p.w * t.dn / (t.sn * t.sn);
}

double eval_g(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_g");
  if (y == 0) return 0.0;
  if (p.boundary_matched()) {
    if (y == kPi / 2) return kPi / 2;
    if (y == kPi) return kPi;
  }
  const auto t = elliptic::jacobi_sn_cn_dn(p.argument_scale() * y, p.parameter());
  return arccot_of_ratio(t.sn, p.w * t.cn);
}

double eval_g_prime(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_g_prime");
  const auto t = elliptic::jacobi_sn_cn_dn(p.argument_scale() * y, p.parameter());
  const double w2 = p.w * p.w;
  return p.alpha * w2 * t.dn / (w2 + (1 - w2) * t.sn * t.sn);
}

double eval_h(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_h");
  if (p.a == 0 || y == 0) return 0.0;
  if (y == kPi && p.beta && p.boundary_matched()) return *p.beta;
  // a^2 y/(1-w^2) - a^2 Pi(n; u)/(alpha w (1-w^2)) with u = alpha w y equals
  // a^2 (Pi(n; u) - u) / (n alpha w^3) since n = (w^2 - 1)/w^2; the reduced
  // third-kind integral avoids the cancellation between the two terms.
  const double n = p.characteristic();
  const double reduced = elliptic::ellint_Pi_arg_reduced(n, p.argument_scale() * y, p.parameter());
  return p.a * p.a * reduced / (p.alpha * p.w * p.w * p.w);
}

double eval_h_prime(const StripMapParams& p, double y) {
  require_closed_strip(y, "eval_h_prime");
  if (p.a == 0) return 0.0;
  const auto t = elliptic::jacobi_sn_cn_dn(p.argument_scale() * y, p.parameter());
  const double w2 = p.w * p.w;
  const double s2 = t.sn * t.sn;
  return p.a * p.a * s2 / (w2 + (1 - w2) * s2);
}

MapValue eval_map(const StripMapParams& p, double x, double y) {
  return {p.alpha * x + eval_h(p, y), eval_g(p, y)};
}

MapSample sample_map(const StripMapParams& p, double y) {
  return {y, eval_g(p, y), eval_h(p, y), eval_g_prime(p, y), eval_h_prime(p, y)};
}

MapSample extend_symmetric(const StripMapParams& p, double y) {
  if (!(y > kPi / 2 && y <= kPi)) throw DomainError("extend_symmetric: y must lie in (pi/2, pi]");
  if (!p.beta) throw DomainError("extend_symmetric: beta must be known");
  const double mirror = kPi - y;
  return {y, kPi - eval_g(p, mirror), *p.beta - eval_h(p, mirror), eval_g_prime(p, mirror),
          eval_h_prime(p, mirror)};
}

double wang_g(const WangParams& p, double y) {
  require_closed_strip(y, "wang_g");
  if (y == 0) return 0.0;
  if (p.boundary_matched()) {
    if (y == kPi / 2) return kPi / 2;
    if (y == kPi) return kPi;
  }
  const auto t = elliptic::jacobi_sn_cn_dn(p.alpha * y, p.parameter());
  return arccot_of_ratio(t.sn, t.cn);
}

double wang_g_prime(const WangParams& p, double y) {
  require_closed_strip(y, "wang_g_prime");
  return p.alpha * elliptic::jacobi_sn_cn_dn(p.alpha * y, p.parameter()).dn;
}

}  // namespace hstrip
