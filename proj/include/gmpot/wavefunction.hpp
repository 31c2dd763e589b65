#pragma once

#include <utility>
#include <vector>

#include "gmpot/core.hpp"

namespace gmpot {

/// One normalized bound state, immutable after construction.
///
/// In the mapped coordinate y = 1/(e^x - 1),
///   phi_n(y) = N_n y^{alpha_n} (1+y)^{-beta_n} P_n(y)
/// where P_n is the terminating hypergeometric polynomial of degree n with
/// P_n(0) = 1, and psi_n(x) = phi_n(y(x)). Normalization is the
/// dimensionless x-convention, int_0^inf psi_n(x)^2 dx = 1; the sqrt(a)
/// factor of physical units is left to callers.
struct BoundState {
  GmpModel model;
  LevelRecord level;
  double log_norm;           ///< ln N_n
  double norm;               ///< N_n, may be +inf if e^{log_norm} overflows
  std::vector<double> poly;  ///< coefficients of P_n in powers of y

  double phi(double y) const;
  double dphi_dy(double y) const;
  double psi(double x) const;
  double dpsi_dx(double x) const;

  /// x beyond which the analytic tail bound N_n e^{-alpha_n x} drops
  /// below `tiny`.
  double tail_cutoff(double tiny = 1e-12) const;
};

/// A point of the radial axis in both coordinates: x = a r > 0 and the
/// mapped coordinate y = 1/(e^x - 1) > 0. y(x) is strictly decreasing and
/// maps x > 0 onto (0, inf).
struct RadialPoint {
  double x;
  double y;

  static RadialPoint from_x(double x);  ///< throws DomainError unless x > 0
  static RadialPoint from_y(double y);  ///< throws DomainError unless y > 0
};

/// Terminating Gauss series: sum_{j=0}^{n} (-n)_j (s)_j / ((c)_j j!) z^j,
/// evaluated by the term-ratio recurrence. Throws DomainError if c is a
/// non-positive integer >= -n+1 (a pole inside the sum).
double hyp2f1_terminating(int n, double s, double c, double z);

/// ln N_n from the closed form, all gamma factors handled in log space.
double log_normalization(const GmpModel& m, int n);

/// N_n itself; throws OverflowError if the value exceeds double range.
double normalization(const GmpModel& m, int n);

BoundState make_state(const GmpModel& m, int n);

AlgebraLabel label_from_state(const BoundState& s);

/// x-interval [lo, hi] holding the requested central probability mass of
/// the state (frac in (0, 1)); the tails outside split the remainder evenly.
std::pair<double, double> mass_window(const BoundState& s, double frac);

/// Reconstruct the bound state carrying labels (l, m, g): n = -l-g must be a
/// non-negative integer to 1e-9 and alpha = (m+g)/2 must be positive.
BoundState state_from_label(double l, double m, double g);

}  // namespace gmpot
