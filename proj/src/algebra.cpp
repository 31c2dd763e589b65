#include "gmpot/algebra.hpp"

#include <cmath>
#include <string>

#include "gmpot/errors.hpp"

namespace gmpot {

const char* to_string(Generator dir) {
  switch (dir) {
    case Generator::GPlus: return "g+";
    case Generator::GMinus: return "g-";
    case Generator::G3: return "g3";
    case Generator::MPlus: return "m+";
    case Generator::MMinus: return "m-";
    case Generator::M3: return "m3";
  }
  return "?";
}

namespace {

constexpr double kRadicandFloor = -1e-12;
constexpr double kBoundarySnap = 1e-9;  // label integrality tolerance

double guarded_sqrt(double radicand, const char* what) {
  if (radicand < kRadicandFloor) {
    throw DomainError(std::string(what) + ": radicand " + std::to_string(radicand) +
                      " is outside the validated bound-state region");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

void check_denominator(double den, const char* what) {
  if (std::abs(den) < 1e-14) {
    throw DomainError(std::string(what) + ": vanishing denominator in ladder coefficient");
  }
}

}  // namespace

double ladder_coeff(const AlgebraLabel& lab, Generator dir) {
  const double l = lab.l, m = lab.m, g = lab.g;
  switch (dir) {
    case Generator::G3:
      return g;
    case Generator::M3:
      return m;
    case Generator::GPlus: {
      if (std::abs(g + l) <= kBoundarySnap) return 0.0;  // highest-weight annihilation
      const double den = g * (m - g - 1.0) * (m + g + 1.0);
      check_denominator(den, "G+");
      const double rad = (g + 1.0) * (m - g) * (m + g) * (g + l) * (g - l + 1.0) / den;
      return -guarded_sqrt(rad, "G+");
    }
    case Generator::GMinus: {
      const double den = g * (m - g + 1.0) * (m + g - 1.0);
      check_denominator(den, "G-");
      const double rad = (g - 1.0) * (m - g) * (m + g) * (g - l) * (g + l - 1.0) / den;
      return -guarded_sqrt(rad, "G-");
    }
    case Generator::MPlus: {
      const double den = (m - g + 1.0) * (m + g + 1.0);
      check_denominator(den, "M+");
      const double rad = (m - g) * (m + g) * (m + l) * (m - l + 1.0) / den;
      return guarded_sqrt(rad, "M+");
    }
    case Generator::MMinus: {
      if (std::abs(m - l) <= kBoundarySnap) return 0.0;  // lowest-weight annihilation
      const double den = (m - g - 1.0) * (m + g - 1.0);
      check_denominator(den, "M-");
      const double rad = (m - g) * (m + g) * (m - l) * (m + l - 1.0) / den;
      return guarded_sqrt(rad, "M-");
    }
  }
  throw DomainError("unknown generator");
}

std::vector<double> reduced_ladder_apply(const BoundState& state, Generator dir,
                                         std::span<const double> y_grid) {
  const double alpha = state.level.alpha;
  const double beta = state.level.beta;
  const AlgebraLabel lab = label_from_state(state);
  std::vector<double> out;
  out.reserve(y_grid.size());
  for (const double y : y_grid) {
    if (!(y > 0.0)) throw DomainError("reduced_ladder_apply requires y > 0");
    const double f = state.phi(y);
    if (dir == Generator::G3) {
      out.push_back(lab.g * f);
      continue;
    }
    if (dir == Generator::M3) {
      out.push_back(lab.m * f);
      continue;
    }
    const double fp = state.dphi_dy(y);
    const double grad = std::sqrt(y * (1.0 + y)) * fp;
    const double up = std::sqrt((1.0 + y) / y) * f;    // sqrt((1+y)/y) phi
    const double down = std::sqrt(y / (1.0 + y)) * f;  // sqrt(y/(1+y)) phi
    switch (dir) {
      case Generator::GPlus: out.push_back(grad - alpha * up + beta * down); break;
      case Generator::GMinus: out.push_back(-grad - alpha * up + beta * down); break;
      case Generator::MPlus: out.push_back(-grad + alpha * up + beta * down); break;
      case Generator::MMinus: out.push_back(grad + alpha * up + beta * down); break;
      default: break;
    }
  }
  return out;
}

SatelliteStep satellite_step(const GmpModel& m, int n, Generator dir) {
  const LevelRecord lv = level(m, n);
  const AlgebraLabel lab{m.l, lv.alpha + lv.beta, lv.alpha - lv.beta};

  double b_next = 0.0;
  int n_next = n;
  switch (dir) {
    case Generator::GPlus:
    case Generator::GMinus: {
      const double sign = (dir == Generator::GPlus) ? 1.0 : -1.0;
      const double den = 2.0 * lab.g + sign * (m.b + 2.0);
      if (std::abs(den) < 1e-14) throw StepError("satellite step has a vanishing denominator");
      b_next = 2.0 * lab.g * m.b / den;
      n_next = (dir == Generator::GPlus) ? n - 1 : n + 1;
      break;
    }
    case Generator::MPlus:
    case Generator::MMinus: {
      const double sign = (dir == Generator::MPlus) ? 1.0 : -1.0;
      const double den = 2.0 * m.C + sign * lab.g * m.b;
      if (std::abs(den) < 1e-14) throw StepError("satellite step has a vanishing denominator");
      b_next = 2.0 * m.C * m.b / den;
      break;
    }
    default:
      throw StepError("satellite steps are defined for G+/G-/M+/M- only");
  }
  if (!(b_next > 0.0)) {
    throw StepError("satellite step leaves the physical parameter domain (b' <= 0)");
  }
  if (n_next < 0) throw StepError("satellite step below the ground level");

  const double k_next = m.k * m.b * m.b / (b_next * b_next);  // preserves k b^2 exactly
  const GmpModel target_model = make_model(k_next, b_next);
  if (n_next > target_model.n_max) {
    throw StepError("satellite step targets an unbound level (alpha' <= 0)");
  }
  const LevelRecord tv = level(target_model, n_next);

  SatelliteStep step;
  step.direction = dir;
  step.coeff = ladder_coeff(lab, dir);
  step.source = StepEndpoint{m.k, m.b, n, lab};
  step.target = StepEndpoint{k_next, b_next, n_next,
                             AlgebraLabel{target_model.l, tv.alpha + tv.beta, tv.alpha - tv.beta}};
  return step;
}

std::vector<SatelliteStep> satellite_chain(const GmpModel& m, int n,
                                           std::span<const Generator> dirs) {
  std::vector<SatelliteStep> chain;
  GmpModel cur = m;
  int cur_n = n;
  for (const Generator dir : dirs) {
    chain.push_back(satellite_step(cur, cur_n, dir));
    cur = make_model(chain.back().target.k, chain.back().target.b);
    cur_n = chain.back().target.n;
  }
  return chain;
}

double casimir_check(const AlgebraLabel& lab) {
  const double c_minus = ladder_coeff(lab, Generator::GMinus);
  const AlgebraLabel down{lab.l, lab.m, lab.g - 1.0};
  const double c_plus_back = ladder_coeff(down, Generator::GPlus);
  return -c_minus * c_plus_back + lab.g * lab.g - lab.g;
}

PtpMap ptp_map(const GmpModel& m, int n) {
  const LevelRecord lv = level(m, n);
  const double two_l_minus_1 = 2.0 * m.l - 1.0;
  return PtpMap{2.0 * lv.beta, 2.0 * lv.alpha, -two_l_minus_1 * two_l_minus_1};
}

int ptp_bound_count(double m1_abs, double m2_abs) {
  m1_abs = std::abs(m1_abs);
  m2_abs = std::abs(m2_abs);
  const double l_max = m1_abs - m2_abs - 2.0;
  if (l_max < 0.0) return 0;
  return static_cast<int>(std::floor(l_max / 2.0)) + 1;
}

}  // namespace gmpot
