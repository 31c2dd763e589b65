#pragma once

#include <span>
#include <vector>

#include "gmpot/core.hpp"
#include "gmpot/wavefunction.hpp"

namespace gmpot {

/// Generators of the two commuting su(1,1) ladders. G+/G- shift g by +-1
/// (level index n by -+1), M+/M- shift m by +-1 (n unchanged); G3/M3 are
/// the diagonal weights.
enum class Generator { GPlus, GMinus, G3, MPlus, MMinus, M3 };

const char* to_string(Generator dir);

/// Endpoint of a satellite step: the potential, the level, and its label.
struct StepEndpoint {
  double k;
  double b;
  int n;
  AlgebraLabel label;
};

/// Record of one ladder step between satellite potentials. The combination
/// k b^2 (equivalently D b^2 / a^2) is preserved exactly by construction.
struct SatelliteStep {
  Generator direction;
  double coeff;  ///< normalized ladder coefficient multiplying the target state
  StepEndpoint source;
  StepEndpoint target;
};

/// Normalized ladder coefficient for the given label and generator. For
/// G3/M3 this is the weight g or m itself. A radicand below -1e-12 means the
/// target leaves the validated bound-state region and raises DomainError;
/// floating-point dust in [-1e-12, 0) is clamped to zero. The annihilation
/// zeros (G+ at g = -l, M- at m = l) are returned as exact zeros.
double ladder_coeff(const AlgebraLabel& label, Generator dir);

/// Pointwise values of the reduced first-order radial operator applied to
/// the state's phi on a grid of y > 0. The auxiliary phases contribute only
/// the weights m and g; they are never discretized.
std::vector<double> reduced_ladder_apply(const BoundState& state, Generator dir,
                                         std::span<const double> y_grid);

/// One satellite step from level n of the model. The inverse-length gauge a
/// is held fixed, so D alone absorbs the change of k.
SatelliteStep satellite_step(const GmpModel& m, int n, Generator dir);

/// Walk a chain of steps, each starting from the previous target.
std::vector<SatelliteStep> satellite_chain(const GmpModel& m, int n,
                                           std::span<const Generator> dirs);

/// -[coeff of G- at g] * [coeff of G+ at g-1] + g^2 - g, which must equal
/// l(l-1) = k b^2 on every label whose g-neighbors are in the bound region.
double casimir_check(const AlgebraLabel& label);

/// Poschl-Teller image of one bound level: the amplitudes |m1| = 2 beta_n,
/// |m2| = 2 alpha_n and the mapped energy eps_bar = -(2l-1)^2 = 4C - 1.
struct PtpMap {
  double m1_abs;
  double m2_abs;
  double eps_bar;
};

PtpMap ptp_map(const GmpModel& m, int n);

/// Number of bound levels of the Poschl-Teller potential with the given
/// amplitudes, by the integer-spaced enumeration L = |m1|-|m2|-2-2j >= 0.
/// Zero whenever |m2| - |m1| >= -1.
int ptp_bound_count(double m1_abs, double m2_abs);

}  // namespace gmpot
