#include "hstrip/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hstrip/errors.hpp"

namespace hstrip::elliptic {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// sn, cn, dn for 0 <= u <= K/2 by descending Landen transformation.
JacobiTriple landen_triple(double u, const EllipticParameter& p) {
  const double m = p.m();
  if (m == 0) return {std::sin(u), std::cos(u), 1.0};

  constexpr int kMaxSteps = 16;
  double a[kMaxSteps + 1];
  double c[kMaxSteps + 1];
  a[0] = 1;
  c[0] = std::sqrt(m);
  double b = std::sqrt(p.complement());
  int n = 0;
  while (n < kMaxSteps && std::abs(c[n]) > kEps * a[n]) {
    const double an = a[n];
    a[n + 1] = (an + b) / 2;
    c[n + 1] = c[n] * c[n] / (4 * a[n + 1]);
    b = std::sqrt(an * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int k = n; k > 0; --k) phi = (phi + std::asin(c[k] / a[k] * std::sin(phi))) / 2;

  const double cn = std::cos(phi);
  return {std::sin(phi), cn, std::sqrt(p.complement() + m * cn * cn)};
}

double letter_value(Letter l, const JacobiTriple& t) {
  switch (l) {
    case Letter::s: return t.sn;
    case Letter::c: return t.cn;
    case Letter::d: return t.dn;
    case Letter::n: return 1.0;
  }
  return 1.0;
}

void require_u_in_half_period(double u, double two_k, const char* who) {
  if (!(u >= 0 && u <= two_k))
    throw DomainError(std::string(who) + ": argument must lie in [0, 2K]");
}

void require_characteristic(double n, const char* who) {
  if (!(n < 1)) throw DomainError(std::string(who) + ": characteristic n must be < 1");
}

// (Pi(n; u) - u) / n on [0, K], written with sn, cn, dn of the argument:
//   sn^3 R_J(cn^2, dn^2, 1, 1 - n sn^2) / 3.
double reduced_pi_first_quarter(double n, double u, const EllipticParameter& p) {
  const JacobiTriple t = jacobi_sn_cn_dn(u, p);
  if (t.sn == 0) return 0.0;
  const double s2 = t.sn * t.sn;
  return t.sn * s2 * carlson_rj(t.cn * t.cn, t.dn * t.dn, 1.0, 1 - n * s2) / 3;
}

}  // namespace

EllipticParameter::EllipticParameter(double m) : m_(m), mc_(1 - m) {
  if (!(m >= 0 && m < 1)) throw DomainError("elliptic parameter m must satisfy 0 <= m < 1");
}

EllipticParameter EllipticParameter::from_complement(double complement) {
  if (!(complement > 0 && complement <= 1))
    throw DomainError("complementary parameter must satisfy 0 < m' <= 1");
  return EllipticParameter(1 - complement, complement);
}

Letter letter_from_char(char ch) {
  switch (ch) {
    case 's': return Letter::s;
    case 'c': return Letter::c;
    case 'd': return Letter::d;
    case 'n': return Letter::n;
    default: throw DomainError(std::string("Jacobi letter must be one of s, c, d, n; got '") + ch + "'");
  }
}

double ellint_K(const EllipticParameter& p) {
  double a = 1;
  double g = std::sqrt(p.complement());
  while (std::abs(a - g) > 2 * kEps * a) {
    const double next = (a + g) / 2;
    g = std::sqrt(a * g);
    a = next;
  }
  return kPi / (a + g);
}

double ellint_K(double m) { return ellint_K(EllipticParameter(m)); }

double ellint_Kprime(double m) {
  if (!(m > 0 && m <= 1)) throw DomainError("ellint_Kprime: m must satisfy 0 < m <= 1");
  return ellint_K(EllipticParameter::from_complement(m));
}

double ellint_F(double theta, const EllipticParameter& p) {
  if (!(theta >= 0 && theta <= kPi)) throw DomainError("ellint_F: theta must lie in [0, pi]");
  if (theta > kPi / 2) return 2 * ellint_K(p) - ellint_F(kPi - theta, p);
  if (theta == 0) return 0.0;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return s * carlson_rf(c * c, p.complement() + p.m() * c * c, 1.0);
}

double ellint_F(double theta, double m) { return ellint_F(theta, EllipticParameter(m)); }

JacobiTriple jacobi_sn_cn_dn(double u, const EllipticParameter& p) {
  if (!std::isfinite(u)) throw DomainError("jacobi_sn_cn_dn: argument must be finite");
  if (p.m() == 0) return {std::sin(u), std::cos(u), 1.0};

  const double k = ellint_K(p);
  double sn_sign = 1;
  double cn_sign = 1;
  if (u < 0) {
    u = -u;
    sn_sign = -1;
  }
  u = std::fmod(u, 4 * k);
  if (u > 2 * k) {
    u -= 2 * k;
    sn_sign = -sn_sign;
    cn_sign = -cn_sign;
  }
  if (u > k) {
    u = 2 * k - u;
    cn_sign = -cn_sign;
  }

  JacobiTriple t;
  if (u > k / 2) {
    // Shift by a quarter period so cn keeps full relative accuracy near K.
    const JacobiTriple r = landen_triple(k - u, p);
    const double kc = std::sqrt(p.complement());
    t = {r.cn / r.dn, kc * r.sn / r.dn, kc / r.dn};
  } else {
    t = landen_triple(u, p);
  }
  return {sn_sign * t.sn, cn_sign * t.cn, t.dn};
}

JacobiTriple jacobi_sn_cn_dn(double u, double m) { return jacobi_sn_cn_dn(u, EllipticParameter(m)); }

double jacobi_ratio(Letter num, Letter den, double u, const EllipticParameter& p) {
  if (num == den) return 1.0;
  const JacobiTriple t = jacobi_sn_cn_dn(u, p);
  const double d = letter_value(den, t);
  if (d == 0) {
    throw PoleError(std::string("jacobi_ratio: ") + static_cast<char>(num) + static_cast<char>(den) +
                    " has a pole at u = " + std::to_string(u));
  }
  return letter_value(num, t) / d;
}

double jacobi_ratio(char num, char den, double u, double m) {
  return jacobi_ratio(letter_from_char(num), letter_from_char(den), u, EllipticParameter(m));
}

Amplitude jacobi_am(double u, const EllipticParameter& p) {
  require_u_in_half_period(u, 2 * ellint_K(p), "jacobi_am");
  const JacobiTriple t = jacobi_sn_cn_dn(u, p);
  return {std::atan2(t.sn, t.cn)};
}

Amplitude jacobi_am(double u, double m) { return jacobi_am(u, EllipticParameter(m)); }

double ellint_Pi_arg_reduced(double n, double u, const EllipticParameter& p) {
  require_characteristic(n, "ellint_Pi_arg_reduced");
  if (!std::isfinite(u)) throw DomainError("ellint_Pi_arg_reduced: argument must be finite");

  // Odd in u, and Pi(n; u + 2K) = Pi(n; u) + 2 Pi(n; K).
  const double sign = u < 0 ? -1.0 : 1.0;
  u = std::abs(u);
  const double k = ellint_K(p);
  const double half_periods = std::floor(u / (2 * k));
  u -= 2 * k * half_periods;
  double value = 0;
  if (half_periods > 0 || u > k) {
    const double complete = carlson_rj(0.0, p.complement(), 1.0, 1 - n) / 3;
    value = 2 * complete * half_periods;
    if (u > k) {
      value += 2 * complete - reduced_pi_first_quarter(n, 2 * k - u, p);
      return sign * value;
    }
  }
  return sign * (value + reduced_pi_first_quarter(n, u, p));
}

double ellint_Pi_arg(double n, double u, const EllipticParameter& p) {
  require_characteristic(n, "ellint_Pi_arg");
  require_u_in_half_period(u, 2 * ellint_K(p), "ellint_Pi_arg");
  if (n == 0) return u;
  return u + n * ellint_Pi_arg_reduced(n, u, p);
}

double ellint_Pi_arg(double n, double u, double m) { return ellint_Pi_arg(n, u, EllipticParameter(m)); }

double ellint_Pi_amp(double n, double theta, const EllipticParameter& p) {
  require_characteristic(n, "ellint_Pi_amp");
  if (!(theta >= 0 && theta <= kPi / 2)) throw DomainError("ellint_Pi_amp: theta must lie in [0, pi/2]");
  if (theta == 0) return 0.0;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double s2 = s * s;
  const double delta2 = p.complement() + p.m() * c * c;
  const double first = s * carlson_rf(c * c, delta2, 1.0);
  if (n == 0) return first;
  return first + n * s * s2 * carlson_rj(c * c, delta2, 1.0, 1 - n * s2) / 3;
}

double ellint_Pi_amp(double n, double theta, double m) {
  return ellint_Pi_amp(n, theta, EllipticParameter(m));
}

double arcsn(double x, const EllipticParameter& p) {
  if (!(x >= 0 && x <= 1)) throw DomainError("arcsn: x must lie in [0, 1]");
  if (x == 0) return 0.0;
  if (x == 1) return ellint_K(p);
  const double one_minus_x2 = (1 - x) * (1 + x);
  return x * carlson_rf(one_minus_x2, p.complement() + p.m() * one_minus_x2, 1.0);
}

double arcsn(double x, double m) { return arcsn(x, EllipticParameter(m)); }

}  // namespace hstrip::elliptic
