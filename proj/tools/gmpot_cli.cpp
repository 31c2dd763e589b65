// Command-line surface for the generalized Morse potential library:
// spectra, wave-function tables, ladder algebra, satellite chains, the
// Poschl-Teller map, SUSY partners, Franck-Condon overlaps, level fitting,
// and the self-verification suite.
//
// Exit codes: 0 success, 1 domain error, 2 verification failure, 3 usage
// error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmpot/algebra.hpp"
#include "gmpot/core.hpp"
#include "gmpot/errors.hpp"
#include "gmpot/numerics.hpp"
#include "gmpot/susyqm.hpp"
#include "gmpot/verify.hpp"
#include "gmpot/wavefunction.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::optional<double> k, b;
  std::optional<double> D, a, re;
  double mu = 1.0, hbar = 1.0;
  int n = 0;
  std::string direction = "g-";
  int steps = 1;
  int grid_points = 20000;
  double tol = 1e-10;
  std::string format = "json";
  std::string out_path;
  std::string config_path;
  std::string suite = "all";
  std::string levels_path;
  std::string kind = "potential";
  std::optional<double> k2, b2;
  int n2 = 0;
};

struct ModelInput {
  gmpot::GmpModel model;
  std::optional<gmpot::PhysicalParams> phys;
};

const json kUnits = {
    {"k", "dimensionless"},  {"b", "dimensionless"},     {"l", "dimensionless"},
    {"C", "dimensionless"},  {"n_max", "count"},         {"n", "count"},
    {"alpha", "dimensionless"}, {"beta", "dimensionless"}, {"eps", "dimensionless"},
    {"E", "energy"},         {"D", "energy"},            {"a", "1/length"},
    {"re", "length"},        {"mu", "mass"},             {"hbar", "action"},
    {"x", "dimensionless"},  {"y", "dimensionless"},     {"r", "length"},
    {"psi", "dimensionless"}, {"m", "dimensionless"},    {"g", "dimensionless"},
    {"coeff", "dimensionless"}, {"overlap", "dimensionless"}, {"factor", "dimensionless"},
    {"kb2", "dimensionless"}, {"Db2_a2", "energy"},      {"R", "dimensionless"},
    {"eps_bar", "dimensionless"}, {"m1_abs", "dimensionless"}, {"m2_abs", "dimensionless"},
    {"W", "dimensionless"},  {"V", "energy"},            {"residual_rms", "energy"}};

ModelInput resolve_model(const Options& o) {
  const bool has_kb = o.k.has_value() || o.b.has_value();
  const bool has_phys = o.D.has_value() || o.a.has_value() || o.re.has_value();
  if (has_kb && has_phys) {
    throw gmpot::DomainError("(k, b) and (D, a, re) inputs are mutually exclusive");
  }
  if (has_kb) {
    if (!o.k || !o.b) throw gmpot::DomainError("both --k and --b are required");
    return ModelInput{gmpot::make_model(*o.k, *o.b), std::nullopt};
  }
  if (!o.D || !o.a || !o.re) {
    throw gmpot::DomainError("provide either --k --b or --D --a --re");
  }
  gmpot::PhysicalParams p{*o.D, *o.a, *o.re, o.mu, o.hbar};
  return ModelInput{gmpot::reduce(p), p};
}

json model_json(const gmpot::GmpModel& m) {
  return json{{"k", m.k}, {"b", m.b}, {"l", m.l}, {"C", m.C}, {"n_max", m.n_max}};
}

json level_json(const gmpot::LevelRecord& lv) {
  json j{{"n", lv.n}, {"alpha", lv.alpha}, {"beta", lv.beta}, {"eps", lv.eps}};
  if (lv.E) j["E"] = *lv.E;
  return j;
}

json label_json(const gmpot::AlgebraLabel& lab) {
  return json{{"l", lab.l}, {"m", lab.m}, {"g", lab.g}};
}

void write_text(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw gmpot::DomainError("cannot open output path " + o.out_path);
  f << text;
}

void emit_json(const Options& o, json doc) {
  doc["units"] = kUnits;
  write_text(o, doc.dump(2) + "\n");
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

gmpot::Generator parse_direction(const std::string& d) {
  if (d == "g+") return gmpot::Generator::GPlus;
  if (d == "g-") return gmpot::Generator::GMinus;
  if (d == "m+") return gmpot::Generator::MPlus;
  if (d == "m-") return gmpot::Generator::MMinus;
  throw gmpot::DomainError("direction must be one of g+, g-, m+, m-");
}

// ----------------------------------------------------------- commands ---

int cmd_spectrum(const Options& o) {
  const ModelInput in = resolve_model(o);
  json levels = json::array();
  for (int n = 0; n <= in.model.n_max; ++n) {
    levels.push_back(level_json(in.phys ? gmpot::level(*in.phys, n) : gmpot::level(in.model, n)));
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# k=" << num(in.model.k) << " b=" << num(in.model.b) << " l=" << num(in.model.l)
       << " C=" << num(in.model.C) << " n_max=" << in.model.n_max << "\n";
    os << "n,alpha[dimensionless],beta[dimensionless],eps[dimensionless]"
       << (in.phys ? ",E[energy]" : "") << "\n";
    for (const auto& lv : levels) {
      os << lv["n"] << "," << num(lv["alpha"]) << "," << num(lv["beta"]) << ","
         << num(lv["eps"]);
      if (in.phys) os << "," << num(lv["E"]);
      os << "\n";
    }
    write_text(o, os.str());
  } else {
    json doc{{"command", "spectrum"}, {"model", model_json(in.model)}, {"levels", levels}};
    if (in.phys) {
      doc["input"] = {{"D", in.phys->D}, {"a", in.phys->a},   {"re", in.phys->r_e},
                      {"mu", in.phys->mu}, {"hbar", in.phys->hbar}};
    } else {
      doc["input"] = {{"k", in.model.k}, {"b", in.model.b}};
    }
    emit_json(o, doc);
  }
  return 0;
}

int cmd_wavefunction(const Options& o) {
  const ModelInput in = resolve_model(o);
  const gmpot::BoundState st = gmpot::make_state(in.model, o.n);
  const int pts = std::max(o.grid_points > 10000 ? 1000 : o.grid_points, 16);
  const double x_hi = st.tail_cutoff(1e-10);
  const double x_lo = 1e-3;
  std::vector<std::pair<double, double>> rows;
  for (int i = 0; i < pts; ++i) {
    const double x = x_lo * std::pow(x_hi / x_lo, static_cast<double>(i) / (pts - 1));
    rows.emplace_back(x, st.psi(x));
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# k=" << num(in.model.k) << " b=" << num(in.model.b) << " n=" << o.n
       << " eps=" << num(st.level.eps) << "\n";
    os << "x[dimensionless],psi[dimensionless]\n";
    for (const auto& [x, p] : rows) os << num(x) << "," << num(p) << "\n";
    write_text(o, os.str());
  } else {
    json samples = json::array();
    for (const auto& [x, p] : rows) samples.push_back({{"x", x}, {"psi", p}});
    emit_json(o, json{{"command", "wavefunction"},
                      {"model", model_json(in.model)},
                      {"level", level_json(st.level)},
                      {"norm", st.norm},
                      {"samples", samples}});
  }
  return 0;
}

int cmd_ladder(const Options& o) {
  const ModelInput in = resolve_model(o);
  const gmpot::Generator dir = parse_direction(o.direction);
  const gmpot::BoundState src = gmpot::make_state(in.model, o.n);
  const gmpot::AlgebraLabel lab = gmpot::label_from_state(src);
  const double coeff = gmpot::ladder_coeff(lab, dir);

  json doc{{"command", "ladder"},
           {"model", model_json(in.model)},
           {"n", o.n},
           {"direction", o.direction},
           {"label", label_json(lab)},
           {"coeff", coeff},
           {"annihilation", coeff == 0.0}};

  if (coeff != 0.0) {
    const gmpot::SatelliteStep step = gmpot::satellite_step(in.model, o.n, dir);
    const gmpot::BoundState tgt =
        gmpot::state_from_label(step.target.label.l, step.target.label.m, step.target.label.g);
    // differential consistency over the region holding 99.9% of the mass:
    // sup |reduced ladder - coeff * target| / sup |coeff * target|
    const auto [lo_s, hi_s] = gmpot::mass_window(src, 0.999);
    const auto [lo_t, hi_t] = gmpot::mass_window(tgt, 0.999);
    const double x_lo = std::min(lo_s, lo_t), x_hi = std::max(hi_s, hi_t);
    std::vector<double> ys;
    for (int i = 0; i < 200; ++i) {
      const double x = x_lo * std::pow(x_hi / x_lo, i / 199.0);
      ys.push_back(1.0 / std::expm1(x));
    }
    const std::vector<double> lhs = gmpot::reduced_ladder_apply(src, dir, ys);
    double sup_num = 0.0, sup_den = 0.0;
    for (size_t i = 0; i < ys.size(); ++i) {
      const double rhs = coeff * tgt.phi(ys[i]);
      sup_num = std::max(sup_num, std::abs(lhs[i] - rhs));
      sup_den = std::max(sup_den, std::abs(rhs));
    }
    doc["target"] = {{"k", step.target.k},
                     {"b", step.target.b},
                     {"n", step.target.n},
                     {"label", label_json(step.target.label)}};
    doc["differential_residual"] = sup_num / sup_den;
  } else {
    doc["target"] = nullptr;
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "direction,coeff[dimensionless],annihilation,target_k[dimensionless],"
          "target_b[dimensionless],target_n,differential_residual\n";
    os << o.direction << "," << num(coeff) << "," << (coeff == 0.0 ? 1 : 0) << ",";
    if (doc["target"].is_null()) {
      os << ",,,\n";
    } else {
      os << num(doc["target"]["k"]) << "," << num(doc["target"]["b"]) << ","
         << doc["target"]["n"] << "," << num(doc["differential_residual"]) << "\n";
    }
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, doc);
  return 0;
}

int cmd_satellite(const Options& o) {
  const ModelInput in = resolve_model(o);
  const gmpot::Generator dir = parse_direction(o.direction);
  const std::vector<gmpot::Generator> dirs(static_cast<size_t>(std::max(o.steps, 1)), dir);
  const std::vector<gmpot::SatelliteStep> chain = gmpot::satellite_chain(in.model, o.n, dirs);

  const double kb2 = in.model.k * in.model.b * in.model.b;
  json steps = json::array();
  for (const auto& s : chain) {
    steps.push_back({{"direction", gmpot::to_string(s.direction)},
                     {"coeff", s.coeff},
                     {"source", {{"k", s.source.k}, {"b", s.source.b}, {"n", s.source.n},
                                 {"label", label_json(s.source.label)}}},
                     {"target", {{"k", s.target.k}, {"b", s.target.b}, {"n", s.target.n},
                                 {"label", label_json(s.target.label)}}}});
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# kb2=" << num(kb2) << " Db2_a2=" << num(0.5 * kb2) << "\n";
    os << "step,direction,coeff[dimensionless],source_k[dimensionless],source_b[dimensionless],"
          "source_n,target_k[dimensionless],target_b[dimensionless],target_n\n";
    for (size_t i = 0; i < chain.size(); ++i) {
      const auto& s = chain[i];
      os << i << "," << gmpot::to_string(s.direction) << "," << num(s.coeff) << ","
         << num(s.source.k) << "," << num(s.source.b) << "," << s.source.n << ","
         << num(s.target.k) << "," << num(s.target.b) << "," << s.target.n << "\n";
    }
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, json{{"command", "satellite"},
                    {"model", model_json(in.model)},
                    {"n", o.n},
                    {"invariants", {{"kb2", kb2}, {"Db2_a2", 0.5 * kb2}}},
                    {"steps", steps}});
  return 0;
}

int cmd_ptp(const Options& o) {
  const ModelInput in = resolve_model(o);
  json rows = json::array();
  for (int n = 0; n <= in.model.n_max; ++n) {
    const gmpot::PtpMap pm = gmpot::ptp_map(in.model, n);
    const double diff = pm.m1_abs - pm.m2_abs;
    rows.push_back({{"n", n},
                    {"m1_abs", pm.m1_abs},
                    {"m2_abs", pm.m2_abs},
                    {"eps_bar", pm.eps_bar},
                    {"bound_count", gmpot::ptp_bound_count(pm.m1_abs, pm.m2_abs)},
                    {"m_diff_integer", std::abs(diff - std::round(diff)) < 1e-9}});
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,m1_abs[dimensionless],m2_abs[dimensionless],eps_bar[dimensionless],bound_count,"
          "m_diff_integer\n";
    for (const auto& r : rows) {
      os << r["n"] << "," << num(r["m1_abs"]) << "," << num(r["m2_abs"]) << ","
         << num(r["eps_bar"]) << "," << r["bound_count"] << ","
         << (r["m_diff_integer"].get<bool>() ? 1 : 0) << "\n";
    }
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, json{{"command", "ptp"}, {"model", model_json(in.model)}, {"levels", rows}});
  return 0;
}

int cmd_susy(const Options& o) {
  const ModelInput in = resolve_model(o);
  const gmpot::PartnerModel pm = gmpot::partner(in.model);
  json pairs = json::array();
  for (int n = 0; n + 1 <= in.model.n_max; ++n) {
    const double eps1 = pm.base.k - std::pow(gmpot::level(pm.base, n).alpha, 2) + pm.R;
    pairs.push_back({{"n", n},
                     {"eps_partner", eps1},
                     {"eps_parent_next", gmpot::level(in.model, n + 1).eps}});
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# partner_k=" << num(pm.base.k) << " partner_b=" << num(pm.base.b)
       << " l_prime=" << num(pm.l_prime) << " R=" << num(pm.R) << "\n";
    os << "n,eps_partner[dimensionless],eps_parent_next[dimensionless]\n";
    for (const auto& p : pairs) {
      os << p["n"] << "," << num(p["eps_partner"]) << "," << num(p["eps_parent_next"]) << "\n";
    }
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, json{{"command", "susy"},
                    {"model", model_json(in.model)},
                    {"partner", {{"k", pm.base.k}, {"b", pm.base.b}, {"l", pm.l_prime},
                                 {"R", pm.R}}},
                    {"l_shift", pm.l_prime - in.model.l},
                    {"spectrum_map", pairs}});
  return 0;
}

int cmd_fcf(const Options& o) {
  const ModelInput in = resolve_model(o);
  if (!o.k2 || !o.b2) throw gmpot::DomainError("fcf requires --k2 and --b2 for the second state");
  const gmpot::BoundState A = gmpot::make_state(in.model, o.n);
  const gmpot::BoundState B = gmpot::make_state(gmpot::make_model(*o.k2, *o.b2), o.n2);
  const double overlap = gmpot::franck_condon(A, B, o.tol);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "overlap[dimensionless],factor[dimensionless]\n"
       << num(overlap) << "," << num(overlap * overlap) << "\n";
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, json{{"command", "fcf"},
                    {"state_a", {{"k", in.model.k}, {"b", in.model.b}, {"n", o.n}}},
                    {"state_b", {{"k", *o.k2}, {"b", *o.b2}, {"n", o.n2}}},
                    {"overlap", overlap},
                    {"factor", overlap * overlap}});
  return 0;
}

int cmd_fit(const Options& o) {
  if (o.levels_path.empty()) throw gmpot::DomainError("fit requires --levels FILE");
  std::ifstream f(o.levels_path);
  if (!f) throw gmpot::DomainError("cannot read levels file " + o.levels_path);
  json doc = json::parse(f);
  std::vector<std::pair<int, double>> obs;
  for (const auto& row : doc.at("levels")) {
    obs.emplace_back(row.at("n").get<int>(), row.at("E").get<double>());
  }
  gmpot::PhysicalParams initial{0, 0, 0, o.mu, o.hbar};
  if (o.D && o.a && o.re) {
    initial.D = *o.D;
    initial.a = *o.a;
    initial.r_e = *o.re;
  } else if (doc.contains("initial")) {
    const auto& ini = doc["initial"];
    initial.D = ini.at("D").get<double>();
    initial.a = ini.at("a").get<double>();
    initial.r_e = ini.at("re").get<double>();
    if (ini.contains("mu")) initial.mu = ini["mu"].get<double>();
    if (ini.contains("hbar")) initial.hbar = ini["hbar"].get<double>();
  } else {
    throw gmpot::DomainError("fit requires an initial guess (--D --a --re or \"initial\" in the file)");
  }
  const gmpot::FitResult r = gmpot::fit_levels(obs, initial);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "D[energy],a[1/length],re[length],residual_rms[energy],n_iterations,converged\n"
       << num(r.params.D) << "," << num(r.params.a) << "," << num(r.params.r_e) << ","
       << num(r.residual_rms) << "," << r.n_iterations << "," << (r.converged ? 1 : 0) << "\n";
    write_text(o, os.str());
    return 0;
  }
  emit_json(o, json{{"command", "fit"},
                    {"params", {{"D", r.params.D}, {"a", r.params.a}, {"re", r.params.r_e},
                                {"mu", r.params.mu}, {"hbar", r.params.hbar}}},
                    {"residual_rms", r.residual_rms},
                    {"n_iterations", r.n_iterations},
                    {"converged", r.converged}});
  return 0;
}

int cmd_verify(const Options& o) {
  const std::vector<gmpot::CheckResult> results = gmpot::run_suite(o.suite);
  size_t failed = 0;
  if (o.format == "csv" || o.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      if (!r.passed) ++failed;
    }
    if (o.format == "json") {
      emit_json(o, json{{"command", "verify"},
                        {"suite", o.suite},
                        {"checks", rows},
                        {"failed", failed}});
    } else {
      std::ostringstream os;
      os << "name,passed,detail\n";
      for (const auto& r : results) {
        os << r.name << "," << (r.passed ? "pass" : "FAIL") << ",\"" << r.detail << "\"\n";
      }
      write_text(o, os.str());
    }
  }
  std::ostringstream table;
  size_t width = 4;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    table << (r.passed ? "pass  " : "FAIL  ") << r.name
          << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
  }
  table << results.size() - failed << "/" << results.size() << " checks passed\n";
  std::cerr << table.str();
  return failed == 0 ? 0 : 2;
}

int cmd_plot(const Options& o) {
  const ModelInput in = resolve_model(o);
  std::ostringstream os;
  if (o.kind == "potential") {
    if (!in.phys) throw gmpot::DomainError("plot --kind potential requires --D --a --re");
    const gmpot::PhysicalParams p = *in.phys;
    const std::vector<double> eps = gmpot::dunham_coefficients(in.model, 1);
    const double hbar_omega = eps[1] * p.energy_scale();
    const double omega = hbar_omega / p.hbar;
    os << "# D=" << num(p.D) << " a=" << num(p.a) << " re=" << num(p.r_e)
       << " hbar_omega=" << num(hbar_omega) << "\n";
    os << "r[length],V_gmp[energy],V_morse[energy],V_harmonic[energy]\n";
    const double step = p.r_e / 100.0;
    for (int i = 1; i <= 300; ++i) {
      const double r = i * step;
      const double vh = 0.5 * p.mu * omega * omega * (r - p.r_e) * (r - p.r_e);
      os << num(r) << "," << num(p.potential(r)) << "," << num(p.morse_potential(r)) << ","
         << num(vh) << "\n";
    }
  } else if (o.kind == "satellite") {
    const gmpot::Generator dir = parse_direction(o.direction);
    const std::vector<gmpot::Generator> dirs(static_cast<size_t>(std::max(o.steps, 1)), dir);
    const std::vector<gmpot::SatelliteStep> chain = gmpot::satellite_chain(in.model, o.n, dirs);
    std::vector<gmpot::GmpModel> models{in.model};
    std::vector<int> ns{o.n};
    for (const auto& s : chain) {
      models.push_back(gmpot::make_model(s.target.k, s.target.b));
      ns.push_back(s.target.n);
    }
    const double db2a2 = 0.5 * in.model.k * in.model.b * in.model.b;
    os << "# Db2_a2=" << num(db2a2) << " (constant along the chain; mu=hbar=1, a fixed)\n";
    std::vector<gmpot::BoundState> states;
    double x_hi = 0.0;
    for (size_t i = 0; i < models.size(); ++i) {
      states.push_back(gmpot::make_state(models[i], ns[i]));
      x_hi = std::max(x_hi, states.back().tail_cutoff(1e-8));
      os << "# member " << i << ": k=" << num(models[i].k) << " b=" << num(models[i].b)
         << " n=" << ns[i] << " eps=" << num(states.back().level.eps)
         << " E=" << num(0.5 * states.back().level.eps) << "\n";
    }
    os << "x[dimensionless]";
    for (size_t i = 0; i < models.size(); ++i) os << ",V" << i << "[dimensionless],psi" << i
                                                 << "[dimensionless]";
    os << "\n";
    const int pts = 400;
    for (int q = 1; q <= pts; ++q) {
      const double x = x_hi * q / pts;
      os << num(x);
      for (size_t i = 0; i < models.size(); ++i) {
        os << "," << num(models[i].potential(x)) << "," << num(states[i].psi(x));
      }
      os << "\n";
    }
  } else {
    throw gmpot::DomainError("plot --kind must be potential or satellite");
  }
  write_text(o, os.str());
  return 0;
}

// Apply a JSON config document as defaults for options the user did not pass.
void apply_config(const json& cfg, CLI::App& app, Options& o) {
  auto set_if_unset = [&](const char* flag, auto& slot) {
    const std::string key = std::string(flag).substr(2);
    const CLI::Option* opt = app.get_option_no_throw(flag);
    if (!cfg.contains(key)) return;
    if (opt != nullptr && opt->count() > 0) return;  // flags override the file
    using T = std::decay_t<decltype(slot)>;
    if constexpr (std::is_same_v<T, std::optional<double>>) {
      slot = cfg[key].get<double>();
    } else {
      slot = cfg[key].get<typename std::decay_t<decltype(slot)>>();
    }
  };
  set_if_unset("--k", o.k);
  set_if_unset("--b", o.b);
  set_if_unset("--D", o.D);
  set_if_unset("--a", o.a);
  set_if_unset("--re", o.re);
  set_if_unset("--mu", o.mu);
  set_if_unset("--hbar", o.hbar);
  set_if_unset("--n", o.n);
  set_if_unset("--direction", o.direction);
  set_if_unset("--steps", o.steps);
  set_if_unset("--grid-points", o.grid_points);
  set_if_unset("--tol", o.tol);
  set_if_unset("--format", o.format);
  set_if_unset("--out", o.out_path);
  set_if_unset("--suite", o.suite);
  set_if_unset("--levels", o.levels_path);
  set_if_unset("--kind", o.kind);
  set_if_unset("--k2", o.k2);
  set_if_unset("--b2", o.b2);
  set_if_unset("--n2", o.n2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Morse potential: spectra, wave functions, ladder algebra"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--k", o.k, "dimensionless depth");
    cmd->add_option("--b", o.b, "dimensionless shape parameter");
    cmd->add_option("--D", o.D, "well depth (energy)");
    cmd->add_option("--a", o.a, "inverse-length scale");
    cmd->add_option("--re", o.re, "equilibrium separation");
    cmd->add_option("--mu", o.mu, "reduced mass (default 1)");
    cmd->add_option("--hbar", o.hbar, "action constant (default 1)");
    cmd->add_option("--n", o.n, "level index");
    cmd->add_option("--direction", o.direction, "ladder direction: g+, g-, m+, m-");
    cmd->add_option("--steps", o.steps, "number of satellite steps");
    cmd->add_option("--grid-points", o.grid_points, "grid points for solvers/tables");
    cmd->add_option("--tol", o.tol, "tolerance for quadrature/solvers");
    cmd->add_option("--format", o.format, "output format: json or csv");
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--config", o.config_path, "JSON config file mirroring flags");
    return cmd;
  };

  CLI::App* spectrum = add_common(app.add_subcommand("spectrum", "bound-state spectrum"));
  CLI::App* wavefunction =
      add_common(app.add_subcommand("wavefunction", "wave-function table for one level"));
  CLI::App* ladder = add_common(app.add_subcommand("ladder", "ladder coefficient and target"));
  CLI::App* satellite = add_common(app.add_subcommand("satellite", "satellite-potential chain"));
  CLI::App* ptp = add_common(app.add_subcommand("ptp", "Poschl-Teller image of the spectrum"));
  CLI::App* susy = add_common(app.add_subcommand("susy", "supersymmetric partner data"));
  CLI::App* fcf = add_common(app.add_subcommand("fcf", "Franck-Condon overlap of two states"));
  fcf->add_option("--k2", o.k2, "depth of the second model");
  fcf->add_option("--b2", o.b2, "shape parameter of the second model");
  fcf->add_option("--n2", o.n2, "level index in the second model");
  CLI::App* fit = add_common(app.add_subcommand("fit", "least-squares fit of (D, a, re)"));
  fit->add_option("--levels", o.levels_path, "JSON file with observed levels");
  CLI::App* verify = add_common(app.add_subcommand("verify", "run the invariant suite"));
  verify->add_option("--suite", o.suite, "core|wavefunction|algebra|susyqm|numerics|all");
  CLI::App* plot = add_common(app.add_subcommand("plot", "CSV plot data"));
  plot->add_option("--kind", o.kind, "potential (comparison) or satellite (chain)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!o.config_path.empty()) {
      std::ifstream f(o.config_path);
      if (!f) throw gmpot::DomainError("cannot read config file " + o.config_path);
      apply_config(json::parse(f), *active, o);
    }
    if (active == spectrum) return cmd_spectrum(o);
    if (active == wavefunction) return cmd_wavefunction(o);
    if (active == ladder) return cmd_ladder(o);
    if (active == satellite) return cmd_satellite(o);
    if (active == ptp) return cmd_ptp(o);
    if (active == susy) return cmd_susy(o);
    if (active == fcf) return cmd_fcf(o);
    if (active == fit) return cmd_fit(o);
    if (active == verify) return cmd_verify(o);
    if (active == plot) return cmd_plot(o);
    std::cerr << "unknown command\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
