#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gmpot/core.hpp"
#include "gmpot/wavefunction.hpp"

namespace gmpot {

using Potential = std::function<double(double)>;

/// Uniform radial grid for the shooting integrator.
struct GridSpec {
  double x_min = 1e-4;
  double x_max = 40.0;
  int n_points = 20000;
};

/// Grid whose upper end satisfies the analytic tail bound
/// N_n e^{-alpha_n x_max} < 1e-12 for every bound level of the model.
GridSpec default_grid(const GmpModel& m, int n_points = 20000);

/// n-th eigenvalue of -psi'' + v psi = eps psi on the half line, by
/// outward/inward Numerov integration with log-derivative matching at the
/// potential minimum, bracketed by node count. The bracket is bisected until
/// its width falls below tol * (energy window scale).
double numerov_eigenvalue(const Potential& v, int n, const GridSpec& grid, double tol = 1e-12);

/// Eigenvalue plus the matched, grid-normalized eigenfunction.
struct NumerovState {
  double eps;
  std::vector<double> x;
  std::vector<double> psi;
  int nodes;
};

NumerovState numerov_state(const Potential& v, int n, const GridSpec& grid, double tol = 1e-12);

/// Node count of the outward solution at energy e_top: the number of bound
/// levels strictly below e_top.
int count_levels_below(const Potential& v, double e_top, const GridSpec& grid);

/// Strict sign changes of a sampled function, ignoring entries below
/// 1e-13 * max|values|.
int count_nodes(std::span<const double> values);

/// Adaptive Gauss-Kronrod (G7,K15) quadrature with absolute tolerance.
/// Throws ConvergenceError if the subdivision limit is reached.
double integrate(const std::function<double(double)>& f, double x_lo, double x_hi, double tol);

/// Overlap integral int_0^inf psi_A(x) psi_B(x) dx of two bound states on a
/// common dimensionless axis. The Franck-Condon factor is its square.
double franck_condon(const BoundState& A, const BoundState& B, double tol = 1e-10);

struct FitOptions {
  int max_iterations = 4000;  ///< function-evaluation budget per descent
  double f_tol = 1e-24;       ///< relative spread of simplex values at convergence
  double x_tol = 1e-12;       ///< relative simplex diameter at convergence
  int restarts = 1;           ///< simplex rebuilds around the best point
};

struct FitResult {
  PhysicalParams params;
  double residual_rms;
  int n_iterations;
  bool converged;
};

/// Least-squares fit of (D, a, r_e) to observed levels (n, E_n) with mu and
/// hbar fixed, by Nelder-Mead simplex descent with restart. Requires at
/// least 3 observed levels. Non-convergence is reported through the flag,
/// not an exception.
FitResult fit_levels(const std::vector<std::pair<int, double>>& observed,
                     const PhysicalParams& initial, const FitOptions& opts = {});

}  // namespace gmpot
