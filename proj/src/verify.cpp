#include "gmpot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "gmpot/algebra.hpp"
#include "gmpot/core.hpp"
#include "gmpot/errors.hpp"
#include "gmpot/numerics.hpp"
#include "gmpot/susyqm.hpp"
#include "gmpot/wavefunction.hpp"

namespace gmpot {

namespace {

// The two reference models exercised by every suite: a shallow two-level
// well and the deeper four-level well used throughout the documentation.
GmpModel model_a() { return make_model(4.0, 2.0); }
GmpModel model_f() { return make_model(20.0, std::expm1(2.5)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void add(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail) {
  out.push_back(CheckResult{name, ok, detail});
}

double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double r = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo * std::exp(i * r);
  return g;
}

// ----------------------------------------------------------------- core ---

void check_core_model(std::vector<CheckResult>& out, const GmpModel& m, const std::string& tag) {
  const double S = m.k * m.b * (m.b + 2.0);
  bool ids = true, mono = true, routes = true;
  double worst_id = 0.0, worst_route = 0.0;
  double prev_eps = 0.0;
  for (int n = 0; n <= m.n_max; ++n) {
    const LevelRecord lv = level(m, n);
    worst_id = std::max(worst_id, rel_diff(lv.beta - lv.alpha, n + m.l));
    worst_id = std::max(worst_id, rel_diff(lv.beta * lv.beta - lv.alpha * lv.alpha, S));
    if (!(lv.eps > 0.0) || !(lv.eps < m.k) || (n > 0 && !(lv.eps > prev_eps))) mono = false;
    prev_eps = lv.eps;
    const double X = n + m.l;
    const double direct = m.k - 0.25 * (X - S / X) * (X - S / X);
    worst_route = std::max(worst_route, rel_diff(lv.eps, direct));
  }
  ids = worst_id <= 1e-12;
  routes = worst_route <= 1e-12;
  add(out, "core.exponent_identities." + tag, ids, "worst rel " + fmt(worst_id));
  add(out, "core.energy_monotone." + tag, mono, "eps strictly increasing in (0, k)");
  add(out, "core.energy_two_routes." + tag, routes, "worst rel " + fmt(worst_route));
}

void check_core(std::vector<CheckResult>& out) {
  check_core_model(out, model_a(), "A");
  check_core_model(out, model_f(), "F");

  // physical two-route agreement on the documented parameters
  {
    const PhysicalParams p{10.0, 1.0, 2.5, 1.0, 1.0};
    const GmpModel m = reduce(p);
    double worst = 0.0;
    for (int n = 0; n <= m.n_max; ++n) {
      const LevelRecord lv = level(p, n);
      worst = std::max(worst, rel_diff(*lv.E, p.energy_scale() * lv.eps));
    }
    add(out, "core.energy_two_routes.physical", worst <= 1e-12, "worst rel " + fmt(worst));
  }

  {
    bool dec = true, ratio_ok = true;
    for (int n = 0; n <= 2; ++n) {
      double prev_gap = 0.0, min_bg = 1e300, max_bg = 0.0;
      int i = 0;
      for (const double b : {1e2, 1e3, 1e4}) {
        const GmpModel m = make_model(20.0, b);
        const double gap = std::abs(level(m, n).eps - morse_eps(20.0, n));
        if (i > 0 && !(gap < prev_gap)) dec = false;
        prev_gap = gap;
        min_bg = std::min(min_bg, b * gap);
        max_bg = std::max(max_bg, b * gap);
        ++i;
      }
      if (!(max_bg / min_bg < 4.0)) ratio_ok = false;
    }
    add(out, "core.morse_limit.gap_decreasing", dec, "n=0..2, b in {1e2,1e3,1e4}");
    add(out, "core.morse_limit.scaled_gap_bounded", ratio_ok, "b*gap within factor 4");
  }

  const std::vector<std::pair<GmpModel, std::string>> dunham_models = {{model_a(), "A"},
                                                                       {model_f(), "F"}};
  for (const auto& [m, tag] : dunham_models) {
    const std::vector<double> eps = dunham_coefficients(m, 3);
    const double partial = eps[0] + 0.5 * eps[1] - 0.25 * eps[2];
    const double bound = std::abs(eps[3]) * 0.125 * 4.0;
    const double diff = std::abs(level(m, 0).eps - partial);
    add(out, "core.dunham_partial_sum." + tag, diff <= bound,
        "diff " + fmt(diff) + " <= " + fmt(bound));
    add(out, "core.dunham_zeroth." + tag, eps[0] == energy_of_nu(m, 0.0), "eps(0) = E(nu=0)");
  }

  {
    double prev = 1e300;
    bool dec = true;
    for (const double b : {10.0, 100.0, 1000.0}) {
      const double e3 = std::abs(dunham_coefficients(make_model(20.0, b), 3)[3]);
      if (!(e3 < prev)) dec = false;
      prev = e3;
    }
    add(out, "core.dunham_corrections_vanish", dec, "|eps(3)| decreasing over b in {10,1e2,1e3}");
  }
}

// --------------------------------------------------------- wavefunction ---

void check_wavefunction_model(std::vector<CheckResult>& out, const GmpModel& m,
                              const std::string& tag) {
  std::vector<BoundState> states;
  for (int n = 0; n <= m.n_max; ++n) states.push_back(make_state(m, n));

  double worst = 0.0;
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i; j < states.size(); ++j) {
      const double hi = std::max(states[i].tail_cutoff(), states[j].tail_cutoff());
      const double val =
          integrate([&](double x) { return states[i].psi(x) * states[j].psi(x); }, 0.0, hi, 1e-10);
      worst = std::max(worst, std::abs(val - (i == j ? 1.0 : 0.0)));
    }
  }
  add(out, "wf.orthonormal." + tag, worst <= 1e-8, "worst deviation " + fmt(worst));

  double worst_res = 0.0;
  for (const BoundState& st : states) {
    const auto [lo, hi] = mass_window(st, 0.9999);
    const std::vector<double> xs = geometric_grid(lo, hi, 200);
    const double hfd = 5e-4;
    double peak = 0.0;
    for (const double x : xs) peak = std::max(peak, std::abs(st.psi(x)));
    for (const double x : xs) {
      if (x - 2.0 * hfd <= 0.0) continue;
      const double d2 = (-st.psi(x - 2 * hfd) + 16.0 * st.psi(x - hfd) - 30.0 * st.psi(x) +
                         16.0 * st.psi(x + hfd) - st.psi(x + 2 * hfd)) /
                        (12.0 * hfd * hfd);
      const double res = -d2 + m.potential(x) * st.psi(x) - st.level.eps * st.psi(x);
      worst_res = std::max(worst_res, std::abs(res) / peak);
    }
  }
  add(out, "wf.schrodinger_residual." + tag, worst_res <= 1e-6, "worst rel " + fmt(worst_res));

  bool nodes_ok = true;
  for (const BoundState& st : states) {
    const auto [lo, hi] = mass_window(st, 0.9999);
    const std::vector<double> xs = geometric_grid(lo, hi, 2000);
    std::vector<double> vals;
    vals.reserve(xs.size());
    for (const double x : xs) vals.push_back(st.psi(x));
    if (count_nodes(vals) != st.level.n) nodes_ok = false;
  }
  add(out, "wf.node_count." + tag, nodes_ok, "count equals level index");

  double worst_rec = 0.0;
  for (int n = 0; n <= m.n_max; ++n) {
    const double closed = log_normalization(m, n);
    const double rec = log_normalization_recursion(m, n);
    worst_rec = std::max(worst_rec, std::abs(std::expm1(rec - closed)));
  }
  add(out, "wf.normalization_recursion." + tag, worst_rec <= 1e-10, "worst rel " + fmt(worst_rec));
}

void check_wavefunction(std::vector<CheckResult>& out) {
  check_wavefunction_model(out, model_a(), "A");
  check_wavefunction_model(out, model_f(), "F");
}

// -------------------------------------------------------------- algebra ---

void check_algebra(std::vector<CheckResult>& out) {
  const GmpModel m = model_a();

  const std::vector<std::pair<int, Generator>> admissible = {
      {0, Generator::GMinus}, {0, Generator::MPlus}, {0, Generator::MMinus},
      {1, Generator::GPlus},  {1, Generator::MPlus},
  };
  double worst_sup = 0.0;
  for (const auto& [n, dir] : admissible) {
    const BoundState src = make_state(m, n);
    const SatelliteStep step = satellite_step(m, n, dir);
    const BoundState tgt =
        state_from_label(step.target.label.l, step.target.label.m, step.target.label.g);
    const auto [lo_s, hi_s] = mass_window(src, 0.999);
    const auto [lo_t, hi_t] = mass_window(tgt, 0.999);
    const double x_lo = std::min(lo_s, lo_t), x_hi = std::max(hi_s, hi_t);
    std::vector<double> ys;
    for (const double x : geometric_grid(x_lo, x_hi, 400)) ys.push_back(1.0 / std::expm1(x));
    const std::vector<double> lhs = reduced_ladder_apply(src, dir, ys);
    double sup_num = 0.0, sup_den = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
      const double rhs = step.coeff * tgt.phi(ys[i]);
      sup_num = std::max(sup_num, std::abs(lhs[i] - rhs));
      sup_den = std::max(sup_den, std::abs(rhs));
    }
    worst_sup = std::max(worst_sup, sup_num / sup_den);
  }
  add(out, "alg.ladder_differential_consistency", worst_sup <= 1e-8,
      "worst sup-norm rel " + fmt(worst_sup));

  {
    const BoundState ground = make_state(m, 0);
    const AlgebraLabel lab = label_from_state(ground);
    const double c = ladder_coeff(lab, Generator::GPlus);
    const auto [lo, hi] = mass_window(ground, 0.999);
    std::vector<double> ys;
    for (const double x : geometric_grid(lo, hi, 400)) ys.push_back(1.0 / std::expm1(x));
    const std::vector<double> vals = reduced_ladder_apply(ground, Generator::GPlus, ys);
    double sup = 0.0, peak = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
      sup = std::max(sup, std::abs(vals[i]));
      peak = std::max(peak, std::abs(ground.phi(ys[i])));
    }
    const double c_low = ladder_coeff(AlgebraLabel{m.l, m.l, -m.l}, Generator::MMinus);
    add(out, "alg.weight_annihilation", c == 0.0 && sup / peak <= 1e-10 && c_low == 0.0,
        "G+ coeff " + fmt(c) + ", residual " + fmt(sup / peak) + ", M- coeff " + fmt(c_low));
  }

  {
    const LevelRecord l0 = level(m, 0);
    const AlgebraLabel base{m.l, l0.alpha + l0.beta, l0.alpha - l0.beta};
    std::vector<AlgebraLabel> labels = {base,
                                        {m.l, base.m + 1.0, base.g},
                                        {m.l, base.m + 2.0, base.g},
                                        {m.l, base.m, base.g - 1.0}};
    double worst = 0.0;
    for (const AlgebraLabel& lab : labels) {
      const double cas = casimir_check(lab);
      worst = std::max(worst, std::abs(cas - m.l * (m.l - 1.0)));
      worst = std::max(worst, std::abs(cas - m.k * m.b * m.b));
    }
    add(out, "alg.casimir_eigenvalue", worst <= 1e-8, "worst deviation " + fmt(worst));
  }

  {
    const std::vector<Generator> dirs = {Generator::MPlus, Generator::MPlus, Generator::GMinus,
                                         Generator::MMinus, Generator::GPlus};
    const std::vector<SatelliteStep> chain = satellite_chain(m, 0, dirs);
    const double f0 = m.k * m.b * m.b;
    const double db2a2_0 = 0.5 * f0;  // D b^2/a^2 with mu = hbar = 1, a fixed
    bool ok = true;
    double worst = 0.0;
    for (const SatelliteStep& s : chain) {
      const double f = s.target.k * s.target.b * s.target.b;
      worst = std::max(worst, rel_diff(f, f0));
      worst = std::max(worst, rel_diff(0.5 * f, db2a2_0));
      const bool g_step = s.direction == Generator::GPlus || s.direction == Generator::GMinus;
      if (g_step && rel_diff(s.target.label.m, s.source.label.m) > 1e-9) ok = false;
      if (!g_step && rel_diff(s.target.label.g, s.source.label.g) > 1e-9) ok = false;
    }
    add(out, "alg.satellite_conservation", ok && worst <= 1e-12,
        "k b^2 and D b^2/a^2 drift " + fmt(worst));
  }

  {
    const LevelRecord l1 = level(m, 1);
    const AlgebraLabel lab{m.l, l1.alpha + l1.beta, l1.alpha - l1.beta};
    const double up = std::abs(ladder_coeff(lab, Generator::GPlus));
    const double down =
        std::abs(ladder_coeff(AlgebraLabel{lab.l, lab.m, lab.g + 1.0}, Generator::GMinus));
    add(out, "alg.nonunitary_witness", std::abs(up - down) > 1e-6,
        "|c+| " + fmt(up) + " vs |c-| " + fmt(down));
  }

  {
    double worst = 0.0;
    for (const GmpModel& mm : {model_a(), model_f()}) {
      for (int n = 0; n <= mm.n_max; ++n) {
        const LevelRecord lv = level(mm, n);
        const double lhs = (2.0 * mm.l - 1.0) * (2.0 * mm.l - 1.0);
        const double t = 2.0 * (lv.beta - lv.alpha) - 1.0 - 2.0 * n;
        worst = std::max(worst, rel_diff(lhs, t * t));
        const PtpMap pm = ptp_map(mm, n);
        worst = std::max(worst, std::abs(pm.eps_bar + lhs));
      }
    }
    const bool counts = ptp_bound_count(3.0, 2.0) == 0 && ptp_bound_count(6.0, 2.0) == 2 &&
                        ptp_bound_count(5.0, 5.0) == 0;
    add(out, "alg.ptp_identity", worst <= 1e-12 && counts, "worst rel " + fmt(worst));
  }
}

// --------------------------------------------------------------- susyqm ---

void check_susy_model(std::vector<CheckResult>& out, const GmpModel& m, const std::string& tag) {
  const PartnerModel pm = partner(m);

  double worst = rel_diff(pm.l_prime, m.l + 1.0);
  for (int n = 0; n + 1 <= m.n_max; ++n) {
    worst = std::max(worst, rel_diff(level(pm.base, n).alpha, level(m, n + 1).alpha));
    worst = std::max(worst, rel_diff(level(pm.base, n).beta, level(m, n + 1).beta));
  }
  add(out, "susy.shape_invariance." + tag, worst <= 1e-12, "worst rel " + fmt(worst));

  {
    const GridSpec g = default_grid(m, 2000);
    double worst_v = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = g.x_min + (g.x_max - g.x_min) * (i + 0.5) / 1000.0;
      const double y = 1.0 / std::expm1(x);
      const double via_w = m.potential(x) + 2.0 * m.l * y * (1.0 + y);
      const double direct = pm.potential(x);
      worst_v = std::max(worst_v, std::abs(via_w - direct) / std::max(1.0, std::abs(direct)));
    }
    add(out, "susy.partner_potential_identity." + tag, worst_v <= 1e-10,
        "worst rel " + fmt(worst_v));
  }

  {
    const BoundState ground = make_state(m, 0);
    const auto [lo, hi] = mass_window(ground, 0.999);
    const std::vector<double> xs = geometric_grid(lo, hi, 300);
    const std::vector<double> vals = apply_A(ground, -1, xs);
    double sup = 0.0, peak = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sup = std::max(sup, std::abs(vals[i]));
      peak = std::max(peak, std::abs(ground.psi(xs[i])));
    }
    add(out, "susy.ground_annihilation." + tag, sup <= 1e-10 * peak,
        "residual " + fmt(sup / peak));
  }

  {
    double worst_i = 0.0;
    const double alpha0 = level(m, 0).alpha;
    for (int n = 1; n <= m.n_max; ++n) {
      const BoundState src = make_state(m, n);
      const BoundState img = make_state(pm.base, n - 1);
      const double alpha_n = level(m, n).alpha;
      const double c = std::sqrt(alpha0 * alpha0 - alpha_n * alpha_n);
      const auto [lo, hi] = mass_window(src, 0.999);
      const std::vector<double> xs = geometric_grid(lo, hi, 300);
      const std::vector<double> vals = apply_A(src, -1, xs);
      double peak_idx_val = 0.0, lhs_at_peak = 0.0, rhs_at_peak = 0.0;
      for (size_t i = 0; i < xs.size(); ++i) {
        const double r = img.psi(xs[i]);
        if (std::abs(r) > peak_idx_val) {
          peak_idx_val = std::abs(r);
          lhs_at_peak = vals[i] / c;
          rhs_at_peak = r;
        }
      }
      const double sign = (lhs_at_peak * rhs_at_peak < 0.0) ? -1.0 : 1.0;
      double sup = 0.0, peak = 0.0;
      for (size_t i = 0; i < xs.size(); ++i) {
        const double r = img.psi(xs[i]);
        sup = std::max(sup, std::abs(sign * vals[i] / c - r));
        peak = std::max(peak, std::abs(r));
      }
      worst_i = std::max(worst_i, sup / peak);
    }
    add(out, "susy.intertwining." + tag, worst_i <= 1e-8, "worst sup rel " + fmt(worst_i));
  }

  {
    const GridSpec g = default_grid(pm.base, 20000);
    double worst_e = 0.0;
    for (int n = 0; n + 1 <= m.n_max; ++n) {
      const double eps = numerov_eigenvalue([&](double x) { return pm.potential(x); }, n, g, 1e-12);
      worst_e = std::max(worst_e, rel_diff(eps, level(m, n + 1).eps));
    }
    add(out, "susy.partner_spectrum_numerov." + tag, worst_e <= 1e-6, "worst rel " + fmt(worst_e));
  }

  {
    const BoundState ground = make_state(m, 0);
    const auto [lo, hi] = mass_window(ground, 0.999);
    double worst_w = 0.0;
    for (const double x : geometric_grid(lo, hi, 200)) {
      const double w = superpotential(m, x);
      const double ld = -ground.dpsi_dx(x) / ground.psi(x);
      worst_w = std::max(worst_w, std::abs(w - ld) / std::max(1.0, std::abs(w)));
    }
    add(out, "susy.superpotential_logderiv." + tag, worst_w <= 1e-8, "worst " + fmt(worst_w));
  }
}

void check_susy(std::vector<CheckResult>& out) {
  check_susy_model(out, model_a(), "A");
  check_susy_model(out, model_f(), "F");

  {
    const GmpModel m = model_a();
    const BoundState s1 = make_state(m, 1);
    const double hi = s1.tail_cutoff();
    const double val = integrate(
        [&](double x) {
          const double w = superpotential(m, x);
          const double a_minus = s1.dpsi_dx(x) + w * s1.psi(x);
          return a_minus * a_minus;
        },
        1e-6, hi, 1e-10);
    const double expected = level(m, 1).eps - level(m, 0).eps;
    add(out, "susy.factorization_energy", std::abs(val - expected) <= 1e-8,
        "<A-psi1,A-psi1> = " + fmt(val) + " vs " + fmt(expected));
  }
}

// ------------------------------------------------------------- numerics ---

void check_numerics(std::vector<CheckResult>& out) {
  const std::vector<std::tuple<GmpModel, std::string, double>> oracle_models = {
      {model_a(), "A", 1e-6}, {model_f(), "F", 1e-5}};
  for (const auto& [m, tag, tol] : oracle_models) {
    const GridSpec g = default_grid(m);
    const Potential v = [mm = m](double x) { return mm.potential(x); };
    double worst = 0.0;
    for (int n = 0; n <= m.n_max; ++n) {
      const double eps = numerov_eigenvalue(v, n, g, 1e-12);
      worst = std::max(worst, rel_diff(eps, level(m, n).eps));
    }
    const int found = count_levels_below(v, m.k, g);
    add(out, "num.oracle_spectrum." + tag, worst <= tol && found == m.n_max + 1,
        "worst rel " + fmt(worst) + ", levels " + std::to_string(found) + "/" +
            std::to_string(m.n_max + 1));
  }

  {
    const double c = 10.0;
    const Potential v = [c](double x) { return (x - c) * (x - c); };
    const GridSpec g{1e-4, 20.0, 20000};
    double worst = 0.0;
    for (int n = 0; n < 4; ++n) {
      const double eps = numerov_eigenvalue(v, n, g, 1e-12);
      worst = std::max(worst, rel_diff(eps, 2.0 * n + 1.0));
    }
    add(out, "num.harmonic_selftest", worst <= 1e-6, "worst rel " + fmt(worst));
  }

  {
    const GmpModel m = model_a();
    const Potential v = [m](double x) { return m.potential(x); };
    const double e1 = numerov_eigenvalue(v, 0, default_grid(m, 20000), 1e-13);
    const double e2 = numerov_eigenvalue(v, 0, default_grid(m, 40000), 1e-13);
    const double e3 = numerov_eigenvalue(v, 0, default_grid(m, 80000), 1e-13);
    const double d1 = std::abs(e1 - e2), d2 = std::abs(e2 - e3);
    const double ratio = d1 / std::max(d2, 1e-300);
    const bool fourth_order = ratio > 8.0 && ratio < 24.0;
    const bool small_change = d2 < 10.0 * 1e-6 * std::abs(e3);
    add(out, "num.grid_convergence", fourth_order && small_change,
        "halving ratio " + fmt(ratio) + ", change " + fmt(d2));
  }

  {
    const BoundState s0 = make_state(model_a(), 0);
    const double hi = s0.tail_cutoff();
    const auto f = [&](double x) { return s0.psi(x) * s0.psi(x); };
    const double coarse = integrate(f, 0.0, hi, 1e-8);
    const double fine = integrate(f, 0.0, hi, 1e-12);
    const double odd = integrate([](double x) { return std::sin(x - 5.0); }, 4.0, 6.0, 1e-12);
    add(out, "num.quadrature_stability",
        std::abs(coarse - fine) < 1e-8 && std::abs(odd) < 1e-12 && std::abs(fine - 1.0) < 1e-9,
        "norm drift " + fmt(std::abs(coarse - fine)) + ", odd " + fmt(std::abs(odd)));
  }

  {
    const GmpModel m = model_a();
    const BoundState s0 = make_state(m, 0);
    const BoundState s1 = make_state(m, 1);
    const double same = franck_condon(s0, s0);
    const double ortho = franck_condon(s0, s1);
    const SatelliteStep step = satellite_step(m, 0, Generator::GMinus);
    const BoundState tgt = make_state(make_model(step.target.k, step.target.b), step.target.n);
    const double cross = std::abs(franck_condon(s0, tgt));
    add(out, "num.franck_condon",
        std::abs(same - 1.0) <= 1e-8 && std::abs(ortho) <= 1e-8 && cross > 0.0 && cross < 1.0,
        "overlap " + fmt(cross));
  }

  {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> dD(5.0, 50.0), da(0.5, 2.0), dr(1.0, 4.0);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      PhysicalParams truth{dD(rng), da(rng), dr(rng), 1.0, 1.0};
      GmpModel m = reduce(truth);
      while (m.n_max + 1 < 3) {  // redraw the rare shallow wells
        truth = PhysicalParams{dD(rng), da(rng), dr(rng), 1.0, 1.0};
        m = reduce(truth);
      }
      const int use = std::min(m.n_max + 1, 8);
      std::vector<std::pair<int, double>> obs;
      for (int n = 0; n < use; ++n) obs.emplace_back(n, *level(truth, n).E);
      const PhysicalParams guess{1.2 * truth.D, 1.2 * truth.a, 1.2 * truth.r_e, 1.0, 1.0};
      const FitResult fit = fit_levels(obs, guess);
      const double err = std::max({rel_diff(fit.params.D, truth.D), rel_diff(fit.params.a, truth.a),
                                   rel_diff(fit.params.r_e, truth.r_e)});
      worst = std::max(worst, err);
      if (!fit.converged || err > 1e-4) ok = false;
    }
    add(out, "num.fit_roundtrip", ok, "worst param rel " + fmt(worst));
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"core", "wavefunction", "algebra", "susyqm", "numerics", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "core") check_core(out);
  if (all || suite == "wavefunction") check_wavefunction(out);
  if (all || suite == "algebra") check_algebra(out);
  if (all || suite == "susyqm") check_susy(out);
  if (all || suite == "numerics") check_numerics(out);
  if (out.empty()) throw DomainError("unknown verify suite: " + suite);
  return out;
}

}  // namespace gmpot
