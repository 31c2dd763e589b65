#pragma once

#include <span>
#include <vector>

#include "gmpot/core.hpp"
#include "gmpot/wavefunction.hpp"

namespace gmpot {

/// Supersymmetric partner of a model: the same potential family with
/// shifted parameters (shape invariance, l' = l + 1) plus a constant
/// residual shift R,
///   v1(x) = k' (1 - b'/(e^x - 1))^2 + R,  R = k - k'.
struct PartnerModel {
  GmpModel base;   ///< the (k', b') model in its own right
  double R;        ///< residual energy shift
  double l_prime;  ///< base.l, equal to l + 1

  double potential(double x) const;  ///< v1(x) = base.potential(x) + R
};

/// Superpotential W(x) = (alpha_0 e^x - beta_0)/(e^x - 1), the negative
/// logarithmic derivative of the ground state.
double superpotential(const GmpModel& m, double x);

/// Factorization operators A+/- = -/+ d/dx + W applied pointwise on a grid.
/// sign = +1 selects A+, sign = -1 selects A-.
std::vector<double> apply_A(const BoundState& state, int sign, std::span<const double> x_grid);

/// Shape-invariant partner: k' = (kb - l)^2/(k b^2 + 2l),
/// b' = (k b^2 + 2l)/(kb - l). Throws SingularityError when kb = l.
PartnerModel partner(const GmpModel& m);

/// ln N_n by descending the partner chain to the closed ground-state form,
/// an independent route to the same coefficient as log_normalization.
double log_normalization_recursion(const GmpModel& m, int n);

/// N_n via the partner-chain recursion; throws OverflowError as
/// normalization does.
double normalization_recursion(const GmpModel& m, int n);

}  // namespace gmpot
