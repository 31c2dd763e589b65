#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace gmpot {

/// A generalized Morse potential in physical units,
///   V(r) = D [1 - b/(e^{ar} - 1)]^2   with   b = e^{a r_e} - 1.
/// The default mu = hbar = 1 is the working convention throughout.
struct PhysicalParams {
  double D;           ///< well depth (energy)
  double a;           ///< inverse-length scale
  double r_e;         ///< equilibrium separation (length)
  double mu = 1.0;    ///< reduced mass
  double hbar = 1.0;  ///< action constant

  /// Conversion factor between dimensionless and physical energies,
  /// E = energy_scale() * eps.
  double energy_scale() const { return a * a * hbar * hbar / (2.0 * mu); }

  /// Shape parameter b = e^{a r_e} - 1 implied by (a, r_e).
  double b_shape() const;

  double potential(double r) const;        ///< V(r), r > 0
  double morse_potential(double r) const;  ///< D (1 - e^{-a(r - r_e)})^2

  void validate() const;  ///< throws DomainError unless all parameters > 0
};

/// Dimensionless model: v(x) = k (1 - b/(e^x - 1))^2 on x > 0, with the
/// derived shape constants and the highest bound index.
struct GmpModel {
  double k;   ///< dimensionless depth, k = 2 mu D / (a hbar)^2
  double b;   ///< shape parameter, b = e^{a r_e} - 1
  double l;   ///< shape constant, l = (1 + sqrt(1 + 4 k b^2))/2 > 1
  double C;   ///< -k b^2, equal to -l(l-1)
  int n_max;  ///< highest bound index; -1 means no bound states

  double potential(double x) const;  ///< v(x), x > 0
};

/// One bound level. E is present only when the record was built from
/// PhysicalParams.
struct LevelRecord {
  int n;
  double alpha;  ///< decay exponent, alpha_n = sqrt(k - eps_n) > 0
  double beta;   ///< companion exponent, beta_n = alpha_n + n + l
  double eps;    ///< dimensionless energy, eps_n = k - alpha_n^2
  std::optional<double> E;  ///< physical energy
};

/// (l, m, g) triple indexing the extended wave functions: m = alpha + beta,
/// g = alpha - beta = -(n + l).
struct AlgebraLabel {
  double l;
  double m;
  double g;
};

/// Shape constants (l, C) for given (k, b).
std::pair<double, double> shape_constants(double k, double b);

/// Build a validated dimensionless model from (k, b).
GmpModel make_model(double k, double b);

/// Dimensionless reduction of physical parameters.
GmpModel reduce(const PhysicalParams& p);

/// Largest n with n + l < sqrt(k b (b+2)), strictly; -1 if none.
int level_count(const GmpModel& m);

LevelRecord level(const GmpModel& m, int n);
LevelRecord level(const PhysicalParams& p, int n);

std::vector<LevelRecord> spectrum(const GmpModel& m);
std::vector<LevelRecord> spectrum(const PhysicalParams& p);

/// Bound-level energy treated as a smooth function of nu = n + 1/2.
double energy_of_nu(const GmpModel& m, double nu);

/// Coefficients eps(0)..eps(K) of the expansion
///   eps(nu) = eps(0) + eps(1) nu - eps(2) nu^2 + eps(3) nu^3 - ...
/// about nu = 0, by central finite differences (step 1e-3) with Richardson
/// extrapolation. Dimensionless; scale by PhysicalParams::energy_scale() for
/// physical coefficients.
std::vector<double> dunham_coefficients(const GmpModel& m, int order);

/// Two-term (Morse) level energy, dimensionless: 2 sqrt(k) nu - nu^2.
double morse_eps(double k, int n);

/// Two-term (Morse) level energy in physical units.
double morse_energy(const PhysicalParams& p, int n);

}  // namespace gmpot
