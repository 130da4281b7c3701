#pragma once

// Closed-form harmonic maps of the hyperbolic strip {0 < y < pi} with metric
// (dx^2 + dy^2) / sin^2 y onto itself, of the ansatz form
//
//   R(x, y) = alpha x + h(y),   S(x, y) = g(y),
//
// with boundary data R(x, 0) = alpha x, R(x, pi) = alpha x + beta,
// S(x, 0) = 0, S(x, pi) = pi.  With n = 1 - 1/w^2 and m = sin^2(lambda):
//
//   g(y) = arccot(w cs(alpha w y | m))
//   h(y) = a^2 y / (1 - w^2) - a^2 / (alpha w (1 - w^2)) Pi(n; alpha w y | m)
//
// The constant a is defined through a^2 = h'(pi/2) and b = g'(pi/2).

#include <optional>

#include "hstrip/elliptic.hpp"

namespace hstrip {

/// Tolerance on |K(m) - alpha w pi/2| under which a parameter set is treated
/// as satisfying the boundary conditions, enabling exact boundary values.
inline constexpr double kQuarterPeriodTolerance = 1e-10;

struct StripMapParams {
  double alpha = 1;
  double a = 0;
  double b = 1;
  double c = 0;       // c^2 = alpha^2 + b^2 + a^4
  double w = 1;       // w >= 1, larger root of the quartic's factorization
  double lambda = 0;  // m = sin^2(lambda)
  double m = 0;
  double m_complement = 1;  // cos^2(lambda) = b^2 / (alpha^2 w^4)
  std::optional<double> beta;
  /// K(m) - alpha w pi/2, signed.
  double quarter_period_defect = 0;

  elliptic::EllipticParameter parameter() const {
    return elliptic::EllipticParameter::from_complement(m_complement);
  }
  /// alpha w: scale from the strip ordinate y to the Jacobi argument.
  double argument_scale() const { return alpha * w; }
  /// Characteristic 1 - 1/w^2 of the third-kind integral in h.
  double characteristic() const { return (w - 1) * (w + 1) / (w * w); }
  bool boundary_matched() const;
};

/// The beta = 0 family g(y) = arccot(cs(alpha y | 1 - (b/alpha)^2)).
struct WangParams {
  double alpha = 1;
  double b = 1;
  double m = 0;
  double m_complement = 1;  // (b/alpha)^2
  double quarter_period_defect = 0;  // K(m) - alpha pi/2

  elliptic::EllipticParameter parameter() const {
    return elliptic::EllipticParameter::from_complement(m_complement);
  }
  bool boundary_matched() const;
};

struct MapSample {
  double y;
  double g;
  double h;
  double g_prime;
  double h_prime;
};

struct MapValue {
  double R;
  double S;
};

/// Builds c, w, lambda and m from (alpha, a, b); beta is left empty.
/// Requires alpha > 0, a >= 0, b > 0.
StripMapParams derive_params(double alpha, double a, double b);

/// Requires 0 < b <= alpha.
WangParams make_wang_params(double alpha, double b);

/// z(y) = cot g(y) = w cs(alpha w y | m) on (0, pi).  PoleError at y = 0, pi.
double eval_z(const StripMapParams& p, double y);
/// z'(y) = -alpha w^2 dn / sn^2.
double eval_z_prime(const StripMapParams& p, double y);

double eval_g(const StripMapParams& p, double y);
double eval_g_prime(const StripMapParams& p, double y);
double eval_h(const StripMapParams& p, double y);
double eval_h_prime(const StripMapParams& p, double y);

/// (R, S) at a point of the closed strip.
MapValue eval_map(const StripMapParams& p, double x, double y);

/// All of g, h, g', h' at y, evaluated directly.
MapSample sample_map(const StripMapParams& p, double y);

/// Sample at y in (pi/2, pi] built by reflection from the half strip:
/// g(y) = pi - g(pi - y), h(y) = beta - h(pi - y).  Requires beta.
MapSample extend_symmetric(const StripMapParams& p, double y);

double wang_g(const WangParams& p, double y);
/// g'(y) = alpha dn(alpha y | m).
double wang_g_prime(const WangParams& p, double y);

}  // namespace hstrip
