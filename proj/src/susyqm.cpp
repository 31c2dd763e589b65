#include "gmpot/susyqm.hpp"

#include <cmath>
#include <string>

#include "gmpot/errors.hpp"

namespace gmpot {

double PartnerModel::potential(double x) const { return base.potential(x) + R; }

double superpotential(const GmpModel& m, double x) {
  if (!(x > 0.0)) throw DomainError("superpotential requires x > 0");
  if (m.n_max < 0) throw DomainError("superpotential requires at least one bound state");
  const LevelRecord g0 = level(m, 0);
  // (alpha_0 e^x - beta_0)/(e^x - 1) written in y to stay finite for large x
  const double y = 1.0 / std::expm1(x);
  return g0.alpha + (g0.alpha - g0.beta) * y;
}

std::vector<double> apply_A(const BoundState& state, int sign, std::span<const double> x_grid) {
  if (sign != 1 && sign != -1) throw DomainError("apply_A sign must be +1 or -1");
  std::vector<double> out;
  out.reserve(x_grid.size());
  for (const double x : x_grid) {
    const double w = superpotential(state.model, x);
    out.push_back(-sign * state.dpsi_dx(x) + w * state.psi(x));
  }
  return out;
}

PartnerModel partner(const GmpModel& m) {
  const double kb = m.k * m.b;
  const double kb2 = m.k * m.b * m.b;
  if (std::abs(kb - m.l) < 1e-12 * (kb + m.l)) {
    throw SingularityError("partner parameters are singular at kb = l");
  }
  const double k_prime = (kb - m.l) * (kb - m.l) / (kb2 + 2.0 * m.l);
  const double b_prime = (kb2 + 2.0 * m.l) / (kb - m.l);
  if (!(k_prime > 0.0) || !(b_prime > 0.0)) {
    throw SingularityError("partner parameters leave the domain (kb < l)");
  }
  PartnerModel pm;
  pm.base = make_model(k_prime, b_prime);
  pm.l_prime = pm.base.l;
  const double kpbp = k_prime * b_prime;
  const double kpbp2 = k_prime * b_prime * b_prime;
  pm.R = (kpbp - 1.0 + pm.l_prime) * (kpbp - 1.0 + pm.l_prime) /
             (kpbp2 + 2.0 - 2.0 * pm.l_prime) -
         k_prime;  // numerically equal to k - k'
  return pm;
}

double log_normalization_recursion(const GmpModel& m, int n) {
  if (n < 0 || n > m.n_max) {
    throw IndexError("normalization_recursion: level " + std::to_string(n) + " is not bound");
  }
  if (n == 0) {
    const LevelRecord g0 = level(m, 0);
    const double a2 = 2.0 * g0.alpha;
    return 0.5 * (std::lgamma(a2 + 2.0 * m.l + 1.0) - std::lgamma(a2) -
                  std::lgamma(2.0 * m.l + 1.0));
  }
  const LevelRecord lv = level(m, n);
  const double a2n = 2.0 * lv.alpha + n;
  const double step =
      0.5 * (std::log(n + 2.0 * m.l) + std::log(a2n) - std::log(static_cast<double>(n)) -
             std::log(a2n + 2.0 * m.l));
  return step + log_normalization_recursion(partner(m).base, n - 1);
}

double normalization_recursion(const GmpModel& m, int n) {
  const double ln = log_normalization_recursion(m, n);
  if (ln > 709.0) {
    throw OverflowError("normalization coefficient exceeds double range (ln N = " +
                        std::to_string(ln) + ")");
  }
  return std::exp(ln);
}

}  // namespace gmpot
