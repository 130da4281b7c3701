// Duplication algorithms for R_F, R_C and R_J (B. C. Carlson, Numer.
// Algorithms 10 (1995) 13-26).  The stopping rule 4^-n Q < |A_n| leaves a
// truncation error of order machine epsilon after the series correction.

#include <algorithm>
#include <cmath>
#include <limits>

#include "hstrip/elliptic.hpp"
#include "hstrip/errors.hpp"

namespace hstrip::elliptic {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxDuplications = 64;

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0 || (x == 0) + (y == 0) + (z == 0) > 1)
    throw DomainError("carlson_rf: arguments must be >= 0 with at most one zero");

  const double x0 = x, y0 = y;
  const double a0 = (x + y + z) / 3;
  double q = std::pow(3 * kEps, -1.0 / 6) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double a = a0;
  double fac = 1;
  for (int i = 0; i < kMaxDuplications && q * fac >= std::abs(a); ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lambda = sx * sy + sx * sz + sy * sz;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    a = (a + lambda) / 4;
    fac /= 4;
  }
  const double dx = (a0 - x0) * fac / a;
  const double dy = (a0 - y0) * fac / a;
  const double dz = -(dx + dy);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(a);
}

double carlson_rc(double x, double y) {
  if (x < 0 || y <= 0) throw DomainError("carlson_rc: requires x >= 0, y > 0");

  const double y0 = y;
  const double a0 = (x + 2 * y) / 3;
  double q = std::pow(3 * kEps, -1.0 / 8) * std::abs(a0 - x);
  double a = a0;
  double fac = 1;
  for (int i = 0; i < kMaxDuplications && q * fac >= std::abs(a); ++i) {
    const double lambda = 2 * std::sqrt(x) * std::sqrt(y) + y;
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    a = (a + lambda) / 4;
    fac /= 4;
  }
  const double s = (y0 - a0) * fac / a;
  const double poly =
      3.0 / 10 + s * (1.0 / 7 + s * (3.0 / 8 + s * (9.0 / 22 + s * (159.0 / 208 + s * 9.0 / 8))));
  return (1 + s * s * poly) / std::sqrt(a);
}

double carlson_rj(double x, double y, double z, double p) {
  if (x < 0 || y < 0 || z < 0 || p <= 0 || (x == 0) + (y == 0) + (z == 0) > 1)
    throw DomainError("carlson_rj: requires x, y, z >= 0 (at most one zero) and p > 0");

  const double x0 = x, y0 = y, z0 = z;
  const double a0 = (x + y + z + 2 * p) / 5;
  const double delta = (p - x) * (p - y) * (p - z);
  double q = std::pow(kEps / 4, -1.0 / 6) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z), std::abs(a0 - p)});
  double a = a0;
  double fac = 1;
  double sum = 0;
  for (int i = 0; i < kMaxDuplications && q * fac >= std::abs(a); ++i) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z), sp = std::sqrt(p);
    const double lambda = sx * sy + sx * sz + sy * sz;
    const double d = (sp + sx) * (sp + sy) * (sp + sz);
    const double e = delta * fac * fac * fac / (d * d);
    sum += fac / d * carlson_rc(1, 1 + e);
    x = (x + lambda) / 4;
    y = (y + lambda) / 4;
    z = (z + lambda) / 4;
    p = (p + lambda) / 4;
    a = (a + lambda) / 4;
    fac /= 4;
  }
  const double dx = (a0 - x0) * fac / a;
  const double dy = (a0 - y0) * fac / a;
  const double dz = (a0 - z0) * fac / a;
  const double dp = -(dx + dy + dz) / 2;
  const double e2 = dx * dy + dx * dz + dy * dz - 3 * dp * dp;
  const double e3 = dx * dy * dz + 2 * e2 * dp + 4 * dp * dp * dp;
  const double e4 = (2 * dx * dy * dz + e2 * dp + 3 * dp * dp * dp) * dp;
  const double e5 = dx * dy * dz * dp * dp;
  const double series = 1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22 -
                        9 * e2 * e3 / 52 + 3 * e5 / 26;
  return fac * series / (a * std::sqrt(a)) + 6 * sum;
}

}  // namespace hstrip::elliptic
