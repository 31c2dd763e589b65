// Acceptance suite: runs every gate criterion at its fixed tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmpot/algebra.hpp"
#include "gmpot/core.hpp"
#include "gmpot/numerics.hpp"
#include "gmpot/susyqm.hpp"
#include "gmpot/verify.hpp"
#include "gmpot/wavefunction.hpp"

using namespace gmpot;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

GmpModel model_a() { return make_model(4.0, 2.0); }
GmpModel model_f() { return make_model(20.0, std::expm1(2.5)); }

// geometric y-grid covering 99.9% of the probability mass of both states
std::vector<double> y_grid_for(const BoundState& a, const BoundState& b) {
  const auto [lo_a, hi_a] = mass_window(a, 0.999);
  const auto [lo_b, hi_b] = mass_window(b, 0.999);
  const double x_lo = std::min(lo_a, lo_b), x_hi = std::max(hi_a, hi_b);
  std::vector<double> ys;
  const double r = std::log(x_hi / x_lo) / 399.0;
  for (int i = 0; i < 400; ++i) ys.push_back(1.0 / std::expm1(x_lo * std::exp(i * r)));
  return ys;
}

// 1. analytic spectrum vs shooting oracle, exact level counts, < 30 s
void criterion_spectrum_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  double worst = 0.0;
  const std::vector<std::tuple<GmpModel, double, int>> cases = {{model_a(), 1e-6, 2},
                                                                {model_f(), 1e-5, 4}};
  for (const auto& [m, tol, expect_count] : cases) {
    const GridSpec g = default_grid(m);
    const Potential v = [mm = m](double x) { return mm.potential(x); };
    for (int n = 0; n <= m.n_max; ++n) {
      const double r = rel(numerov_eigenvalue(v, n, g, 1e-12), level(m, n).eps);
      worst = std::max(worst, r);
      if (r > tol) pass = false;
    }
    if (count_levels_below(v, m.k, g) != expect_count) pass = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 30.0) pass = false;
  report(1, "spectrum-oracle", pass, "worst rel " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. closed-form normalization vs partner recursion and quadrature
void criterion_normalization() {
  bool pass = true;
  double worst_rec = 0.0, worst_quad = 0.0;
  for (const GmpModel m : {model_a(), model_f()}) {
    for (int n = 0; n <= m.n_max; ++n) {
      const double rec =
          std::abs(std::expm1(log_normalization_recursion(m, n) - log_normalization(m, n)));
      worst_rec = std::max(worst_rec, rec);
      if (rec > 1e-10) pass = false;
      const BoundState st = make_state(m, n);
      const double norm = integrate([&](double x) { return st.psi(x) * st.psi(x); }, 0.0,
                                    st.tail_cutoff(), 1e-10);
      worst_quad = std::max(worst_quad, std::abs(norm - 1.0));
      if (std::abs(norm - 1.0) > 1e-8) pass = false;
    }
  }
  report(2, "normalization", pass,
         "recursion rel " + fmt(worst_rec) + ", quadrature " + fmt(worst_quad));
}

// 3. orthogonality of distinct levels within each model
void criterion_orthogonality() {
  bool pass = true;
  double worst = 0.0;
  for (const GmpModel m : {model_a(), model_f()}) {
    std::vector<BoundState> states;
    for (int n = 0; n <= m.n_max; ++n) states.push_back(make_state(m, n));
    for (size_t i = 0; i < states.size(); ++i) {
      for (size_t j = i + 1; j < states.size(); ++j) {
        const double hi = std::max(states[i].tail_cutoff(), states[j].tail_cutoff());
        const double val = integrate(
            [&](double x) { return states[i].psi(x) * states[j].psi(x); }, 0.0, hi, 1e-10);
        worst = std::max(worst, std::abs(val));
        if (std::abs(val) > 1e-8) pass = false;
      }
    }
  }
  report(3, "orthogonality", pass, "worst |overlap| " + fmt(worst));
}

// 4. reduced differential action = coefficient x target state; annihilation
void criterion_ladder() {
  const GmpModel m = model_a();
  bool pass = true;
  double worst = 0.0;
  const std::vector<std::pair<int, Generator>> admissible = {
      {0, Generator::GMinus}, {0, Generator::MPlus}, {0, Generator::MMinus},
      {1, Generator::GPlus},  {1, Generator::MPlus}};
  for (const auto& [n, dir] : admissible) {
    const BoundState src = make_state(m, n);
    const SatelliteStep step = satellite_step(m, n, dir);
    const BoundState tgt =
        state_from_label(step.target.label.l, step.target.label.m, step.target.label.g);
    const std::vector<double> ys = y_grid_for(src, tgt);
    const std::vector<double> lhs = reduced_ladder_apply(src, dir, ys);
    double sup_num = 0.0, sup_den = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
      const double rhs = step.coeff * tgt.phi(ys[i]);
      sup_num = std::max(sup_num, std::abs(lhs[i] - rhs));
      sup_den = std::max(sup_den, std::abs(rhs));
    }
    worst = std::max(worst, sup_num / sup_den);
    if (sup_num / sup_den > 1e-8) pass = false;
  }

  // annihilation at the highest g-weight (coefficient and residual)
  const BoundState ground = make_state(m, 0);
  if (ladder_coeff(label_from_state(ground), Generator::GPlus) != 0.0) pass = false;
  const std::vector<double> ys = y_grid_for(ground, ground);
  const std::vector<double> resid = reduced_ladder_apply(ground, Generator::GPlus, ys);
  double sup = 0.0, peak = 0.0;
  for (size_t i = 0; i < ys.size(); ++i) {
    sup = std::max(sup, std::abs(resid[i]));
    peak = std::max(peak, std::abs(ground.phi(ys[i])));
  }
  if (sup > 1e-10 * peak) pass = false;
  // annihilation at the lowest m-weight (coefficient)
  if (ladder_coeff(AlgebraLabel{m.l, m.l, -m.l}, Generator::MMinus) != 0.0) pass = false;
  report(4, "ladder-consistency", pass,
         "worst sup rel " + fmt(worst) + ", residual " + fmt(sup / peak));
}

// 5. the Casimir combination equals l(l-1) = k b^2 on tested labels
void criterion_casimir() {
  const GmpModel m = model_a();
  const LevelRecord l0 = level(m, 0);
  const AlgebraLabel base{m.l, l0.alpha + l0.beta, l0.alpha - l0.beta};
  bool pass = true;
  double worst = 0.0;
  for (const AlgebraLabel& lab :
       {base, AlgebraLabel{m.l, base.m + 1.0, base.g}, AlgebraLabel{m.l, base.m + 2.0, base.g},
        AlgebraLabel{m.l, base.m, base.g - 1.0}}) {
    const double cas = casimir_check(lab);
    worst = std::max({worst, std::abs(cas - m.l * (m.l - 1.0)), std::abs(cas - m.k * m.b * m.b)});
  }
  if (worst > 1e-8) pass = false;
  report(5, "casimir", pass, "worst deviation " + fmt(worst));
}

// 6. conservation along five-step chains
void criterion_satellite_conservation() {
  const GmpModel m = model_a();
  bool pass = true;
  double worst = 0.0;
  const std::vector<std::vector<Generator>> chains = {
      {Generator::MPlus, Generator::MPlus, Generator::GMinus, Generator::MMinus,
       Generator::GPlus},
      {Generator::MPlus, Generator::GMinus, Generator::MPlus, Generator::GPlus,
       Generator::MMinus}};
  for (const auto& dirs : chains) {
    const std::vector<SatelliteStep> chain = satellite_chain(m, 0, dirs);
    const double f0 = m.k * m.b * m.b;
    for (const SatelliteStep& s : chain) {
      const double f = s.target.k * s.target.b * s.target.b;
      worst = std::max(worst, rel(f, f0));
      worst = std::max(worst, rel(0.5 * f, 0.5 * f0));  // D b^2/a^2 with a fixed, mu = hbar = 1
      if (rel(f, f0) > 1e-12) pass = false;
      const bool g_step = s.direction == Generator::GPlus || s.direction == Generator::GMinus;
      const double drift = g_step ? rel(s.target.label.m, s.source.label.m)
                                  : rel(s.target.label.g, s.source.label.g);
      if (drift > 1e-9) pass = false;
    }
  }
  report(6, "satellite-conservation", pass, "worst drift " + fmt(worst));
}

// 7. shape invariance, partner spectrum via the oracle, intertwining
void criterion_susy() {
  bool pass = true;
  double worst_shift = 0.0, worst_osc = 0.0, worst_twine = 0.0;
  for (const GmpModel m : {model_a(), model_f()}) {
    const PartnerModel pm = partner(m);
    worst_shift = std::max(worst_shift, rel(pm.l_prime, m.l + 1.0));
    for (int n = 0; n + 1 <= m.n_max; ++n) {
      worst_shift = std::max(worst_shift, rel(level(pm.base, n).alpha, level(m, n + 1).alpha));
    }
    const GridSpec g = default_grid(pm.base);
    for (int n = 0; n + 1 <= m.n_max; ++n) {
      const double eps =
          numerov_eigenvalue([&](double x) { return pm.potential(x); }, n, g, 1e-12);
      worst_osc = std::max(worst_osc, rel(eps, level(m, n + 1).eps));
    }
    const double alpha0 = level(m, 0).alpha;
    for (int n = 1; n <= m.n_max; ++n) {
      const BoundState src = make_state(m, n);
      const BoundState img = make_state(pm.base, n - 1);
      const double c = std::sqrt(alpha0 * alpha0 - level(m, n).alpha * level(m, n).alpha);
      std::vector<double> xs;
      const double x_hi = src.tail_cutoff(1e-6);
      for (int i = 1; i <= 300; ++i) xs.push_back(x_hi * i / 300.0);
      const std::vector<double> vals = apply_A(src, -1, xs);
      double sup = 0.0, peak = 0.0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sup = std::max(sup, std::abs(vals[i] / c - img.psi(xs[i])));
        peak = std::max(peak, std::abs(img.psi(xs[i])));
      }
      worst_twine = std::max(worst_twine, sup / peak);
    }
  }
  if (worst_shift > 1e-12 || worst_osc > 1e-6 || worst_twine > 1e-8) pass = false;
  report(7, "susyqm", pass,
         "shift " + fmt(worst_shift) + ", oracle " + fmt(worst_osc) + ", intertwine " +
             fmt(worst_twine));
}

// 8. the mapped-problem identity and the no-bound-state condition
void criterion_ptp() {
  bool pass = true;
  double worst = 0.0;
  for (const GmpModel m : {model_a(), model_f()}) {
    for (int n = 0; n <= m.n_max; ++n) {
      const LevelRecord lv = level(m, n);
      const double sq = (2.0 * m.l - 1.0) * (2.0 * m.l - 1.0);
      const double t = 2.0 * (lv.beta - lv.alpha) - 1.0 - 2.0 * n;
      worst = std::max(worst, rel(sq, t * t));
    }
  }
  if (worst > 1e-12) pass = false;
  // whenever |m2| - |m1| >= -1 there are no bound levels
  for (double m1 = 0.0; m1 <= 6.0; m1 += 0.25) {
    for (double m2 = m1 - 1.0; m2 <= m1 + 3.0; m2 += 0.25) {
      if (m2 < 0.0) continue;
      if (m2 - m1 >= -1.0 && ptp_bound_count(m1, m2) != 0) pass = false;
    }
  }
  report(8, "ptp-consistency", pass, "worst identity rel " + fmt(worst));
}

// 9. two-term limit: the gap to the full spectrum shrinks like 1/b
void criterion_morse_limit() {
  bool pass = true;
  for (int n = 0; n <= 2; ++n) {
    double prev = 1e300, lo = 1e300, hi = 0.0;
    for (const double b : {1e2, 1e3, 1e4}) {
      const double gap = std::abs(level(make_model(20.0, b), n).eps - morse_eps(20.0, n));
      if (!(gap < prev)) pass = false;
      prev = gap;
      lo = std::min(lo, b * gap);
      hi = std::max(hi, b * gap);
    }
    if (!(hi / lo < 4.0)) pass = false;
  }
  report(9, "morse-limit", pass, "scaled gaps bounded within x4");
}

// 10. cubic expansion coefficient dies off as b grows
void criterion_dunham() {
  double prev = 1e300;
  bool pass = true;
  std::string vals;
  for (const double b : {10.0, 100.0, 1000.0}) {
    const double e3 = std::abs(dunham_coefficients(make_model(20.0, b), 3)[3]);
    vals += fmt(e3) + " ";
    if (!(e3 < prev)) pass = false;
    prev = e3;
  }
  report(10, "dunham-decay", pass, "|eps(3)| = " + vals);
}

// 11. synthetic-level fit recovery on 20 seeded draws, < 60 s
void criterion_fit() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(424242u);
  std::uniform_real_distribution<double> dD(5.0, 50.0), da(0.5, 2.0), dr(1.0, 4.0);
  bool pass = true;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    PhysicalParams truth{dD(rng), da(rng), dr(rng), 1.0, 1.0};
    GmpModel m = reduce(truth);
    while (m.n_max + 1 < 3) {
      truth = PhysicalParams{dD(rng), da(rng), dr(rng), 1.0, 1.0};
      m = reduce(truth);
    }
    std::vector<std::pair<int, double>> obs;
    const int use = std::min(m.n_max + 1, 8);
    for (int n = 0; n < use; ++n) obs.emplace_back(n, *level(truth, n).E);
    const FitResult fit =
        fit_levels(obs, PhysicalParams{1.2 * truth.D, 1.2 * truth.a, 1.2 * truth.r_e, 1.0, 1.0});
    const double err = std::max({rel(fit.params.D, truth.D), rel(fit.params.a, truth.a),
                                 rel(fit.params.r_e, truth.r_e)});
    worst = std::max(worst, err);
    if (!fit.converged || err > 1e-4) pass = false;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60.0) pass = false;
  report(11, "fit-roundtrip", pass, "worst rel " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 12. the command-line surface: verify exits 0, spectrum emits 4 levels
void criterion_cli() {
  bool pass = true;
  std::string detail;
  const std::string base = "/tmp/gmpot_acceptance_" + std::to_string(::getpid());
  {
    const std::string cmd =
        std::string(GMPOT_CLI_PATH) + " verify --suite all > /dev/null 2>> " + base + ".log";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0) pass = false;
    detail += "verify exit " + std::to_string(code);
  }
  {
    const std::string out = base + ".json";
    const std::string cmd = std::string(GMPOT_CLI_PATH) +
                            " spectrum --D 10 --a 1 --re 2.5 --out " + out + " 2>> " + base +
                            ".log";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    size_t n_levels = 0;
    if (code == 0) {
      std::ifstream f(out);
      const json doc = json::parse(f);
      n_levels = doc["levels"].size();
    }
    if (code != 0 || n_levels != 4) pass = false;
    detail += ", spectrum levels " + std::to_string(n_levels);
    std::remove(out.c_str());
    std::remove((base + ".log").c_str());
  }
  report(12, "cli", pass, detail);
}

}  // namespace

int main() {
  criterion_spectrum_oracle();
  criterion_normalization();
  criterion_orthogonality();
  criterion_ladder();
  criterion_casimir();
  criterion_satellite_conservation();
  criterion_susy();
  criterion_ptp();
  criterion_morse_limit();
  criterion_dunham();
  criterion_fit();
  criterion_cli();
  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
