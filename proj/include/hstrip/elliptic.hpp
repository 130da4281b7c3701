#pragma once

// Real-argument elliptic integrals and Jacobi elliptic functions.
//
// Complete integrals use the arithmetic-geometric mean, the Jacobi triple
// uses descending Landen transformations on an argument reduced to
// [0, K/2], and the incomplete integrals go through Carlson's symmetric
// forms R_F and R_J.  Everything is a pure function of its arguments.

namespace hstrip::elliptic {

/// The parameter m of F(theta|m), held together with its complement
/// m' = 1 - m.  Building it from the complement keeps m' at full relative
/// precision when m is close to 1, which the quarter period is sensitive to.
class EllipticParameter {
 public:
  /// Requires 0 <= m < 1.
  explicit EllipticParameter(double m);

  /// Requires 0 < complement <= 1.
  static EllipticParameter from_complement(double complement);

  double m() const noexcept { return m_; }
  double complement() const noexcept { return mc_; }

 private:
  EllipticParameter(double m, double mc) noexcept : m_(m), mc_(mc) {}

  double m_;
  double mc_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Jacobi amplitude, in radians.
struct Amplitude {
  double theta;
};

/// Letters of the glued-letter convention: pq = p/q with s = sn, c = cn,
/// d = dn and n = 1.
enum class Letter : char { s = 's', c = 'c', d = 'd', n = 'n' };

/// Parses one of "scdn"; throws DomainError otherwise.
Letter letter_from_char(char ch);

// Carlson symmetric standard integrals.
double carlson_rf(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rj(double x, double y, double z, double p);

/// Complete integral of the first kind, K(m) = F(pi/2 | m).
double ellint_K(const EllipticParameter& p);
double ellint_K(double m);

/// K'(m) = K(1 - m), the magnitude of the imaginary quarter period.
/// Defined for 0 < m <= 1.
double ellint_Kprime(double m);

/// Incomplete first kind in amplitude form, theta in [0, pi].
double ellint_F(double theta, const EllipticParameter& p);
double ellint_F(double theta, double m);

/// (sn, cn, dn) at any real argument.
JacobiTriple jacobi_sn_cn_dn(double u, const EllipticParameter& p);
JacobiTriple jacobi_sn_cn_dn(double u, double m);

/// The ratio function pq(u|m).  Throws PoleError when q vanishes at u.
double jacobi_ratio(Letter num, Letter den, double u, const EllipticParameter& p);
double jacobi_ratio(char num, char den, double u, double m);

/// Amplitude am(u|m) for u in [0, 2K]; the result lies in [0, pi].
Amplitude jacobi_am(double u, const EllipticParameter& p);
Amplitude jacobi_am(double u, double m);

/// Third kind in Jacobi-argument form,
///   Pi(n; u|m) = integral_0^u dt / (1 - n sn^2(t|m)),  u in [0, 2K], n < 1.
double ellint_Pi_arg(double n, double u, const EllipticParameter& p);
double ellint_Pi_arg(double n, double u, double m);

/// (Pi(n; u|m) - u) / n, i.e. integral_0^u sn^2 / (1 - n sn^2) dt, for any
/// real u and n < 1.  Finite at n = 0 and free of the cancellation that
/// subtracting u from Pi would incur when n is small.
double ellint_Pi_arg_reduced(double n, double u, const EllipticParameter& p);

/// Third kind in amplitude form, theta in [0, pi/2], n < 1.
double ellint_Pi_amp(double n, double theta, const EllipticParameter& p);
double ellint_Pi_amp(double n, double theta, double m);

/// Inverse of sn on [0, 1]: arcsn(x|m) = integral_0^x dt/sqrt((1-t^2)(1-m t^2)).
double arcsn(double x, const EllipticParameter& p);
double arcsn(double x, double m);

}  // namespace hstrip::elliptic
