#include "gmpot/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gmpot/errors.hpp"

namespace gmpot {

namespace {

double horner(const std::vector<double>& c, double y) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
  return acc;
}

double horner_derivative(const std::vector<double>& c, double y) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 1;) acc = acc * y + static_cast<double>(i) * c[i];
  return acc;
}

}  // namespace

RadialPoint RadialPoint::from_x(double x) {
  if (!(x > 0.0)) throw DomainError("RadialPoint requires x > 0");
  return RadialPoint{x, 1.0 / std::expm1(x)};
}

RadialPoint RadialPoint::from_y(double y) {
  if (!(y > 0.0)) throw DomainError("RadialPoint requires y > 0");
  return RadialPoint{std::log1p(1.0 / y), y};
}

double hyp2f1_terminating(int n, double s, double c, double z) {
  if (n < 0) throw DomainError("hyp2f1_terminating requires n >= 0");
  const double cr = std::round(c);
  if (c <= 0.0 && std::abs(c - cr) < 1e-12 && cr >= static_cast<double>(-n + 1)) {
    throw DomainError("hyp2f1_terminating: lower parameter hits a pole inside the sum");
  }
  double term = 1.0;
  double acc = 1.0;
  for (int j = 0; j < n; ++j) {
    term *= (static_cast<double>(-n + j) * (s + j)) * z / ((c + j) * (j + 1));
    acc += term;
  }
  return acc;
}

double log_normalization(const GmpModel& m, int n) {
  const LevelRecord lv = level(m, n);  // validates 0 <= n <= n_max
  const double a2 = 2.0 * lv.alpha;
  const double num = std::log(lv.beta) + std::lgamma(a2 + n + 1.0) + std::lgamma(a2 + n + 2.0 * m.l);
  const double den = std::lgamma(n + 1.0) + std::log(n + m.l) + std::lgamma(a2) +
                     std::lgamma(a2 + 1.0) + std::lgamma(n + 2.0 * m.l);
  return 0.5 * (num - den);
}

double normalization(const GmpModel& m, int n) {
  const double ln = log_normalization(m, n);
  constexpr double max_log = 709.0;  // just under ln(DBL_MAX)
  if (ln > max_log) {
    throw OverflowError("normalization coefficient exceeds double range (ln N = " +
                        std::to_string(ln) + ")");
  }
  return std::exp(ln);
}

BoundState make_state(const GmpModel& m, int n) {
  const LevelRecord lv = level(m, n);
  BoundState st;
  st.model = m;
  st.level = lv;
  st.log_norm = log_normalization(m, n);
  st.norm = st.log_norm > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(st.log_norm);
  // Coefficients of the degree-n polynomial factor in y. With
  // s = -n+1-2l and c = 2 alpha_n + 1, the term ratio of the series in
  // z = -y gives p_{j+1} = p_j (n-j)(s+j) / ((c+j)(j+1)).
  const double s = -n + 1.0 - 2.0 * m.l;
  const double c = 2.0 * lv.alpha + 1.0;
  st.poly.assign(static_cast<size_t>(n) + 1, 0.0);
  st.poly[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    st.poly[j + 1] = st.poly[j] * (static_cast<double>(n - j) * (s + j)) / ((c + j) * (j + 1));
  }
  return st;
}

double BoundState::phi(double y) const {
  if (!(y > 0.0)) throw DomainError("phi requires y > 0");
  const double envelope = std::exp(log_norm + level.alpha * std::log(y) - level.beta * std::log1p(y));
  return envelope * horner(poly, y);
}

double BoundState::dphi_dy(double y) const {
  if (!(y > 0.0)) throw DomainError("dphi_dy requires y > 0");
  const double envelope = std::exp(log_norm + level.alpha * std::log(y) - level.beta * std::log1p(y));
  const double logistic = level.alpha / y - level.beta / (1.0 + y);
  return envelope * (logistic * horner(poly, y) + horner_derivative(poly, y));
}

double BoundState::psi(double x) const {
  if (!(x > 0.0)) throw DomainError("psi requires x > 0");
  return phi(1.0 / std::expm1(x));
}

double BoundState::dpsi_dx(double x) const {
  if (!(x > 0.0)) throw DomainError("dpsi_dx requires x > 0");
  const double y = 1.0 / std::expm1(x);
  return dphi_dy(y) * (-y * (1.0 + y));
}

double BoundState::tail_cutoff(double tiny) const {
  const double x = (log_norm + std::log(1.0 / tiny)) / level.alpha;
  const double past_peak = std::log(level.beta / level.alpha) + 5.0;
  return std::max(x, past_peak);
}

AlgebraLabel label_from_state(const BoundState& s) {
  return AlgebraLabel{s.model.l, s.level.alpha + s.level.beta, s.level.alpha - s.level.beta};
}

std::pair<double, double> mass_window(const BoundState& s, double frac) {
  if (!(frac > 0.0) || !(frac < 1.0)) throw DomainError("mass_window requires 0 < frac < 1");
  const int n = 4000;
  const double x_lo = 1e-4;
  const double x_hi = s.tail_cutoff(1e-14);
  const double h = (x_hi - x_lo) / (n - 1);
  std::vector<double> cum(n, 0.0);
  double prev = s.psi(x_lo);
  for (int i = 1; i < n; ++i) {
    const double cur = s.psi(x_lo + i * h);
    cum[i] = cum[i - 1] + 0.5 * h * (prev * prev + cur * cur);
    prev = cur;
  }
  const double lo_target = 0.5 * (1.0 - frac) * cum.back();
  const double hi_target = (1.0 - 0.5 * (1.0 - frac)) * cum.back();
  double lo = x_lo, hi = x_hi;
  for (int i = 0; i < n; ++i) {
    if (cum[i] >= lo_target) {
      lo = x_lo + i * h;
      break;
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    if (cum[i] <= hi_target) {
      hi = x_lo + i * h;
      break;
    }
  }
  return {std::max(lo, x_lo), std::min(hi, x_hi)};
}

BoundState state_from_label(double l, double m, double g) {
  if (!(l > 1.0)) throw LabelError("label requires l > 1");
  const double n_real = -l - g;
  const double n_round = std::round(n_real);
  if (!(std::abs(n_real - n_round) <= 1e-9) || n_round < 0.0) {
    throw LabelError("label requires -l-g to be a non-negative integer");
  }
  if (!((m + g) > 0.0)) throw LabelError("label requires m + g = 2 alpha > 0");
  const double C = -l * (l - 1.0);
  const double den = m * g - C;
  if (std::abs(den) < 1e-14 * (std::abs(m * g) + std::abs(C))) {
    throw LabelError("label maps to a singular shape parameter");
  }
  const double b = 2.0 * C / den;
  if (!(b > 0.0)) throw LabelError("label maps outside the parameter domain (b <= 0)");
  const double k = l * (l - 1.0) / (b * b);
  const GmpModel model = make_model(k, b);
  const int n = static_cast<int>(n_round);
  if (n > model.n_max) throw LabelError("label indexes a level above the bound spectrum");
  return make_state(model, n);
}

}  // namespace gmpot
