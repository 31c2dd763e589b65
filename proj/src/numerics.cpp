#include "gmpot/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gmpot/errors.hpp"

namespace gmpot {

GridSpec default_grid(const GmpModel& m, int n_points) {
  if (m.n_max < 0) throw DomainError("default_grid requires at least one bound state");
  double x_max = std::log1p(m.b) + 10.0;
  for (int n = 0; n <= m.n_max; ++n) {
    const double alpha = level(m, n).alpha;
    // one extra e-fold keeps the tail bound N e^{-alpha x_max} < 1e-12 strict
    const double tail = (log_normalization(m, n) + 27.631021115928547 + 1.0) / alpha;
    x_max = std::max(x_max, tail);
  }
  return GridSpec{1e-4, x_max, n_points};
}

namespace {

struct Workspace {
  std::vector<double> x;
  std::vector<double> v;
  double h = 0.0;
};

Workspace sample(const Potential& pot, const GridSpec& g) {
  if (!(g.x_min > 0.0) || !(g.x_max > g.x_min)) throw DomainError("grid bounds must satisfy 0 < x_min < x_max");
  if (g.n_points < 1000) throw DomainError("grid needs at least 1000 points");
  Workspace ws;
  ws.h = (g.x_max - g.x_min) / (g.n_points - 1);
  ws.x.resize(g.n_points);
  ws.v.resize(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    ws.x[i] = g.x_min + i * ws.h;
    ws.v[i] = pot(ws.x[i]);
  }
  return ws;
}

// First index where the Numerov weight h^2 (v - E)/12 is small enough for a
// stable march; the 1/x^2 wall near the origin is skipped and the solution
// is seeded with its local growth rate instead (the x^l behavior).
int first_stable(const Workspace& ws, double E) {
  const double w_cap = 0.25;
  const double c = ws.h * ws.h / 12.0;
  for (size_t i = 0; i < ws.v.size(); ++i) {
    if (c * (ws.v[i] - E) <= w_cap) return static_cast<int>(i);
  }
  return -1;
}

// Outward sweep across the whole grid counting strict sign changes.
int sweep_nodes(const Workspace& ws, double E) {
  const int n = static_cast<int>(ws.v.size());
  const int i0 = first_stable(ws, E);
  if (i0 < 0 || i0 > n - 3) {
    throw NoEigenvalueError("energy window admits no stable integration start");
  }
  const double c = ws.h * ws.h / 12.0;
  double prev, cur;
  const double f0 = ws.v[i0] - E, f1 = ws.v[i0 + 1] - E;
  if (f0 > 0.0 && f1 > 0.0) {
    prev = std::exp(-ws.h * 0.5 * (std::sqrt(f0) + std::sqrt(f1)));
    cur = 1.0;
  } else {
    prev = 0.0;
    cur = 1e-8;
  }
  int nodes = 0;
  int last_sign = cur > 0.0 ? 1 : -1;
  for (int i = i0 + 1; i < n - 1; ++i) {
    const double wm = c * (ws.v[i - 1] - E);
    const double w0 = c * (ws.v[i] - E);
    const double wp = c * (ws.v[i + 1] - E);
    double next = (2.0 * (1.0 + 5.0 * w0) * cur - (1.0 - wm) * prev) / (1.0 - wp);
    if (next != 0.0) {
      const int s = next > 0.0 ? 1 : -1;
      if (s != last_sign) ++nodes;
      last_sign = s;
    }
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e200) {
      prev /= std::abs(cur);
      cur = cur > 0.0 ? 1.0 : -1.0;
    }
  }
  return nodes;
}

// Numerov-consistent derivative, O(h^4):
//   psi' ~ (psi_+ - psi_-)/(2h) - (h/12)(f_+ psi_+ - f_- psi_-)
double mesh_derivative(double psi_m, double psi_p, double f_m, double f_p, double h) {
  return (psi_p - psi_m) / (2.0 * h) - (h / 12.0) * (f_p * psi_p - f_m * psi_m);
}

struct Match {
  double mismatch = 0.0;
  bool ok = false;
};

// Log-derivative mismatch at index im between the outward and inward
// branches: zero exactly at a discrete eigenvalue.
Match log_derivative_mismatch(const Workspace& ws, double E, int im) {
  const int n = static_cast<int>(ws.v.size());
  const double c = ws.h * ws.h / 12.0;
  Match out;

  const int i0 = first_stable(ws, E);
  if (i0 < 0 || im < i0 + 2 || im > n - 3) return out;

  // outward to im+1
  double prev, cur;
  const double f0 = ws.v[i0] - E, f1 = ws.v[i0 + 1] - E;
  if (f0 > 0.0 && f1 > 0.0) {
    prev = std::exp(-ws.h * 0.5 * (std::sqrt(f0) + std::sqrt(f1)));
    cur = 1.0;
  } else {
    prev = 0.0;
    cur = 1e-8;
  }
  double l_m = 0.0, l_0 = 0.0, l_p = 0.0;
  for (int i = i0 + 1; i <= im; ++i) {
    const double wm = c * (ws.v[i - 1] - E);
    const double w0 = c * (ws.v[i] - E);
    const double wp = c * (ws.v[i + 1] - E);
    const double next = (2.0 * (1.0 + 5.0 * w0) * cur - (1.0 - wm) * prev) / (1.0 - wp);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e200) {
      const double s = 1.0 / std::abs(cur);
      prev *= s;
      cur *= s;
      l_m *= s;  // keep any stored sample in the same scale
    }
    if (i == im - 1) l_m = cur;
    if (i == im) l_0 = cur;
  }
  // one more step to im+1 without renormalization
  {
    const double wm = c * (ws.v[im - 1] - E);
    const double w0 = c * (ws.v[im] - E);
    const double wp = c * (ws.v[im + 1] - E);
    l_p = (2.0 * (1.0 + 5.0 * w0) * l_0 - (1.0 - wm) * l_m) / (1.0 - wp);
  }

  // inward from the right edge to im-1
  double nxt = 1e-8;
  const double kap = std::sqrt(std::max(ws.v[n - 1] - E, 1e-30));
  double cur_r = nxt * std::exp(std::min(kap * ws.h, 30.0));
  double r_m = 0.0, r_0 = 0.0, r_p = 0.0;
  for (int i = n - 2; i >= im; --i) {
    const double wp = c * (ws.v[i + 1] - E);
    const double w0 = c * (ws.v[i] - E);
    const double wm = c * (ws.v[i - 1] - E);
    const double prev_r = (2.0 * (1.0 + 5.0 * w0) * cur_r - (1.0 - wp) * nxt) / (1.0 - wm);
    nxt = cur_r;
    cur_r = prev_r;
    if (std::abs(cur_r) > 1e200) {
      const double s = 1.0 / std::abs(cur_r);
      nxt *= s;
      cur_r *= s;
      r_p *= s;
      r_0 *= s;
    }
    if (i - 1 == im + 1) r_p = cur_r;
    if (i - 1 == im) r_0 = cur_r;
    if (i - 1 == im - 1) r_m = cur_r;
  }

  const double fm = ws.v[im - 1] - E, fp = ws.v[im + 1] - E;
  if (l_0 == 0.0 || r_0 == 0.0) return out;
  const double dl = mesh_derivative(l_m, l_p, fm, fp, ws.h) / l_0;
  const double dr = mesh_derivative(r_m, r_p, fm, fp, ws.h) / r_0;
  if (!std::isfinite(dl) || !std::isfinite(dr)) return out;
  out.mismatch = dl - dr;
  out.ok = true;
  return out;
}

int matching_index(const Workspace& ws) {
  const auto it = std::min_element(ws.v.begin(), ws.v.end());
  int im = static_cast<int>(std::distance(ws.v.begin(), it));
  const int n = static_cast<int>(ws.v.size());
  im = std::clamp(im, 2, n - 3);
  return im;
}

double eigenvalue_impl(const Workspace& ws, int n_index, double tol) {
  if (n_index < 0) throw DomainError("eigenvalue index must be non-negative");
  const double v_min = *std::min_element(ws.v.begin(), ws.v.end());
  const double e_top = ws.v.back();
  if (!(e_top > v_min)) throw NoEigenvalueError("potential admits no bound window on this grid");
  if (sweep_nodes(ws, e_top) < n_index + 1) {
    throw NoEigenvalueError("node-count bracketing found no eigenvalue " +
                            std::to_string(n_index) + " below the asymptote");
  }
  const double scale = std::max({std::abs(v_min), std::abs(e_top), 1.0});
  const double width_stop = std::max(tol, 5e-15) * scale;
  double lo = v_min, hi = e_top;

  // node-count bisection first; it is unconditionally robust
  const double coarse_width = std::max(width_stop, 1e-7 * scale);
  while (hi - lo > coarse_width) {
    const double mid = 0.5 * (lo + hi);
    if (sweep_nodes(ws, mid) >= n_index + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  // refine on the log-derivative mismatch when it brackets a sign change
  const int im = matching_index(ws);
  Match a = log_derivative_mismatch(ws, lo, im);
  Match b = log_derivative_mismatch(ws, hi, im);
  if (a.ok && b.ok && a.mismatch * b.mismatch < 0.0) {
    while (hi - lo > width_stop) {
      const double mid = 0.5 * (lo + hi);
      const Match c = log_derivative_mismatch(ws, mid, im);
      if (!c.ok) break;
      if (c.mismatch * a.mismatch <= 0.0) {
        hi = mid;
      } else {
        lo = mid;
        a = c;
      }
    }
  }
  while (hi - lo > width_stop) {  // fallback: finish on node counts
    const double mid = 0.5 * (lo + hi);
    if (sweep_nodes(ws, mid) >= n_index + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Full outward (or inward) branch with retroactive renormalization, for
// assembling the eigenfunction once the eigenvalue is known.
std::vector<double> sweep_store(const Workspace& ws, double E, int i_from, int i_to, bool outward) {
  const double c = ws.h * ws.h / 12.0;
  const int count = std::abs(i_to - i_from) + 1;
  std::vector<double> out(count, 0.0);
  auto renorm = [&out](double s, int upto) {
    for (int q = 0; q <= upto; ++q) out[q] *= s;
  };
  if (outward) {
    const double f0 = ws.v[i_from] - E, f1 = ws.v[i_from + 1] - E;
    if (f0 > 0.0 && f1 > 0.0) {
      out[0] = std::exp(-ws.h * 0.5 * (std::sqrt(f0) + std::sqrt(f1)));
      out[1] = 1.0;
    } else {
      out[0] = 0.0;
      out[1] = 1e-8;
    }
    for (int q = 2; q < count; ++q) {
      const int i = i_from + q - 1;
      const double wm = c * (ws.v[i - 1] - E);
      const double w0 = c * (ws.v[i] - E);
      const double wp = c * (ws.v[i + 1] - E);
      out[q] = (2.0 * (1.0 + 5.0 * w0) * out[q - 1] - (1.0 - wm) * out[q - 2]) / (1.0 - wp);
      if (std::abs(out[q]) > 1e200) renorm(1.0 / std::abs(out[q]), q);
    }
  } else {
    const double kap = std::sqrt(std::max(ws.v[i_from] - E, 1e-30));
    out[0] = 1e-8;
    out[1] = out[0] * std::exp(std::min(kap * ws.h, 30.0));
    for (int q = 2; q < count; ++q) {
      const int i = i_from - q + 1;
      const double wp = c * (ws.v[i + 1] - E);
      const double w0 = c * (ws.v[i] - E);
      const double wm = c * (ws.v[i - 1] - E);
      out[q] = (2.0 * (1.0 + 5.0 * w0) * out[q - 1] - (1.0 - wp) * out[q - 2]) / (1.0 - wm);
      if (std::abs(out[q]) > 1e200) renorm(1.0 / std::abs(out[q]), q);
    }
  }
  return out;
}

}  // namespace

double numerov_eigenvalue(const Potential& v, int n, const GridSpec& grid, double tol) {
  const Workspace ws = sample(v, grid);
  return eigenvalue_impl(ws, n, tol);
}

NumerovState numerov_state(const Potential& v, int n, const GridSpec& grid, double tol) {
  const Workspace ws = sample(v, grid);
  const double eps = eigenvalue_impl(ws, n, tol);
  const int npts = static_cast<int>(ws.v.size());
  const int im = matching_index(ws);
  const int i0 = std::max(first_stable(ws, eps), 0);

  std::vector<double> left = sweep_store(ws, eps, i0, im, true);
  std::vector<double> right = sweep_store(ws, eps, npts - 1, im, false);

  NumerovState st;
  st.eps = eps;
  st.x = ws.x;
  st.psi.assign(npts, 0.0);
  const double psi_l = left.back();
  const double psi_r = right.back();
  const double ratio = (psi_r != 0.0 && psi_l != 0.0) ? psi_l / psi_r : 1.0;
  for (int i = i0; i <= im; ++i) st.psi[i] = left[i - i0];
  for (int i = im; i < npts; ++i) st.psi[i] = right[npts - 1 - i] * ratio;

  double norm2 = 0.0;  // trapezoid; display/node accuracy only
  for (int i = 0; i < npts; ++i) {
    const double w = (i == 0 || i == npts - 1) ? 0.5 : 1.0;
    norm2 += w * st.psi[i] * st.psi[i] * ws.h;
  }
  if (norm2 > 0.0) {
    const double s = 1.0 / std::sqrt(norm2);
    for (double& p : st.psi) p *= s;
  }
  st.nodes = count_nodes(st.psi);
  return st;
}

int count_levels_below(const Potential& v, double e_top, const GridSpec& grid) {
  const Workspace ws = sample(v, grid);
  return sweep_nodes(ws, e_top);
}

int count_nodes(std::span<const double> values) {
  double peak = 0.0;
  for (const double v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0;
  const double floor = 1e-13 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (const double v : values) {
    if (std::abs(v) < floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

namespace {

// Gauss-Kronrod (G7, K15) nodes and weights on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_mid = f(mid);
  double kron = kKronrodWeights[7] * f_mid;
  double gauss = kGaussWeights[3] * f_mid;  // center node belongs to both rules
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fs = f(mid - dx) + f(mid + dx);
    kron += kKronrodWeights[i] * fs;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fs;
  }
  kron *= half;
  gauss *= half;
  return Panel{kron, std::abs(kron - gauss)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  const Panel p = gauss_kronrod(f, a, b);
  if (p.error <= tol || (b - a) < 1e-15 * (std::abs(a) + std::abs(b))) return p.value;
  if (depth >= 60) throw ConvergenceError("quadrature subdivision limit reached");
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double x_lo, double x_hi, double tol) {
  if (!(x_hi > x_lo)) throw DomainError("integrate requires x_hi > x_lo");
  if (!(tol > 0.0)) throw DomainError("integrate requires tol > 0");
  return adapt(f, x_lo, x_hi, tol, 0);
}

double franck_condon(const BoundState& A, const BoundState& B, double tol) {
  const double hi = std::max(A.tail_cutoff(), B.tail_cutoff());
  return integrate([&](double x) { return A.psi(x) * B.psi(x); }, 0.0, hi, tol);
}

namespace {

using Theta = std::array<double, 3>;  // (D, a, r_e)

double objective(const Theta& t, const PhysicalParams& ref,
                 const std::vector<std::pair<int, double>>& observed) {
  if (!(t[0] > 0.0) || !(t[1] > 0.0) || !(t[2] > 0.0)) {
    double viol = 0.0;
    for (const double v : t) viol += std::max(0.0, -v);
    return 1e100 * (1.0 + viol);
  }
  PhysicalParams p{t[0], t[1], t[2], ref.mu, ref.hbar};
  const GmpModel m = reduce(p);
  // real-valued bound capacity: level n is bound iff n < cap; penalizing by
  // the continuous shortfall keeps a descent direction when the trial
  // parameters bind too few levels
  const double cap = std::sqrt(m.k * m.b * (m.b + 2.0)) - m.l;
  double sum = 0.0;
  for (const auto& [n, e_obs] : observed) {
    if (n >= cap) {
      const double d = 1.0 + n - cap;
      sum += 1e20 * d * d;
      continue;
    }
    const double r = *level(p, n).E - e_obs;
    sum += r * r;
  }
  return sum;
}

struct Descent {
  Theta best_x;
  double best_f;
  int evals;
  bool converged;
};

Descent nelder_mead(const std::function<double(const Theta&)>& f, const Theta& start,
                    double spread, const FitOptions& opts) {
  constexpr int dim = 3;
  std::array<Theta, dim + 1> xs;
  std::array<double, dim + 1> fs;
  xs[0] = start;
  for (int i = 0; i < dim; ++i) {
    xs[i + 1] = start;
    xs[i + 1][i] *= (1.0 + spread);
  }
  int evals = 0;
  for (int i = 0; i <= dim; ++i) fs[i] = (++evals, f(xs[i]));

  auto order = [&] {
    std::array<int, dim + 1> idx{0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    std::array<Theta, dim + 1> xs2;
    std::array<double, dim + 1> fs2;
    for (int i = 0; i <= dim; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs = xs2;
    fs = fs2;
  };

  bool converged = false;
  while (evals < opts.max_iterations) {
    order();
    const double fspread = fs[dim] - fs[0];
    double diam = 0.0;
    for (int i = 1; i <= dim; ++i) {
      for (int q = 0; q < dim; ++q) {
        diam = std::max(diam, std::abs(xs[i][q] - xs[0][q]) / std::max(1.0, std::abs(xs[0][q])));
      }
    }
    if (fspread <= opts.f_tol * (1.0 + std::abs(fs[0])) || diam <= opts.x_tol) {
      converged = true;
      break;
    }

    Theta centroid{0.0, 0.0, 0.0};
    for (int i = 0; i < dim; ++i) {
      for (int q = 0; q < dim; ++q) centroid[q] += xs[i][q] / dim;
    }
    auto blend = [&](double t) {
      Theta p;
      for (int q = 0; q < dim; ++q) p[q] = centroid[q] + t * (xs[dim][q] - centroid[q]);
      return p;
    };

    const Theta refl = blend(-1.0);
    const double f_refl = (++evals, f(refl));
    if (f_refl < fs[0]) {
      const Theta expd = blend(-2.0);
      const double f_expd = (++evals, f(expd));
      if (f_expd < f_refl) {
        xs[dim] = expd;
        fs[dim] = f_expd;
      } else {
        xs[dim] = refl;
        fs[dim] = f_refl;
      }
    } else if (f_refl < fs[dim - 1]) {
      xs[dim] = refl;
      fs[dim] = f_refl;
    } else {
      const bool outside = f_refl < fs[dim];
      const Theta contr = blend(outside ? -0.5 : 0.5);
      const double f_contr = (++evals, f(contr));
      if (f_contr < std::min(f_refl, fs[dim])) {
        xs[dim] = contr;
        fs[dim] = f_contr;
      } else {
        for (int i = 1; i <= dim; ++i) {  // shrink toward the best vertex
          for (int q = 0; q < dim; ++q) xs[i][q] = xs[0][q] + 0.5 * (xs[i][q] - xs[0][q]);
          fs[i] = (++evals, f(xs[i]));
        }
      }
    }
  }
  order();
  return Descent{xs[0], fs[0], evals, converged};
}

}  // namespace

FitResult fit_levels(const std::vector<std::pair<int, double>>& observed,
                     const PhysicalParams& initial, const FitOptions& opts) {
  if (observed.size() < 3) throw DomainError("fit_levels requires at least 3 observed levels");
  initial.validate();
  for (const auto& [n, e] : observed) {
    (void)e;
    if (n < 0) throw DomainError("fit_levels: observed level index must be non-negative");
  }
  const auto f = [&](const Theta& t) { return objective(t, initial, observed); };

  double obs_scale = 0.0;
  for (const auto& [n, e] : observed) obs_scale += e * e;
  const Theta start{initial.D, initial.a, initial.r_e};
  const double f0 = f(start);
  if (f0 <= 1e-30 * std::max(1.0, obs_scale)) {
    return FitResult{initial, std::sqrt(f0 / observed.size()), 0, true};
  }

  Descent d = nelder_mead(f, start, 0.05, opts);
  int total_evals = d.evals;
  for (int r = 0; r < opts.restarts; ++r) {
    Descent d2 = nelder_mead(f, d.best_x, 0.005, opts);
    total_evals += d2.evals;
    if (d2.best_f <= d.best_f) d = Descent{d2.best_x, d2.best_f, total_evals, d2.converged};
  }

  FitResult out;
  out.params = PhysicalParams{d.best_x[0], d.best_x[1], d.best_x[2], initial.mu, initial.hbar};
  out.residual_rms = std::sqrt(d.best_f / observed.size());
  out.n_iterations = total_evals;
  out.converged = d.converged && d.best_f < 1e19;  // all levels bound at the optimum
  return out;
}

}  // namespace gmpot
