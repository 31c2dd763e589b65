#include "gmpot/core.hpp"

#include <cmath>
#include <string>

#include "gmpot/errors.hpp"

namespace gmpot {

namespace {

// y(x) = 1/(e^x - 1), the mapped coordinate.
double y_of_x(double x) { return 1.0 / std::expm1(x); }

// n + l appears as the single combination X everywhere below.
double level_sum(const GmpModel& m, int n) { return static_cast<double>(n) + m.l; }

// k b (b + 2) = beta^2 - alpha^2 for every bound level.
double well_product(double k, double b) { return k * b * (b + 2.0); }

// alpha_n without forming the difference of two large near-equal terms:
// S - X^2 = 2kb - l(2n+1) - n^2 since l(l-1) = k b^2.
double alpha_of(const GmpModel& m, double n_real) {
  const double X = n_real + m.l;
  const double num = 2.0 * m.k * m.b - m.l * (2.0 * n_real + 1.0) - n_real * n_real;
  return num / (2.0 * X);
}

}  // namespace

double PhysicalParams::b_shape() const { return std::expm1(a * r_e); }

void PhysicalParams::validate() const {
  if (!(D > 0.0) || !(a > 0.0) || !(r_e > 0.0) || !(mu > 0.0) || !(hbar > 0.0)) {
    throw DomainError("physical parameters must all be positive");
  }
}

double PhysicalParams::potential(double r) const {
  if (!(r > 0.0)) throw DomainError("potential requires r > 0");
  const double t = 1.0 - b_shape() / std::expm1(a * r);
  return D * t * t;
}

double PhysicalParams::morse_potential(double r) const {
  const double t = 1.0 - std::exp(-a * (r - r_e));
  return D * t * t;
}

double GmpModel::potential(double x) const {
  if (!(x > 0.0)) throw DomainError("potential requires x > 0");
  const double t = 1.0 - b * y_of_x(x);
  return k * t * t;
}

std::pair<double, double> shape_constants(double k, double b) {
  if (!(k > 0.0) || !(b > 0.0)) throw DomainError("shape_constants requires k > 0 and b > 0");
  const double C = -k * b * b;
  const double l = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * k * b * b));
  return {l, C};
}

GmpModel make_model(double k, double b) {
  auto [l, C] = shape_constants(k, b);
  GmpModel m{k, b, l, C, -1};
  const double root = std::sqrt(well_product(k, b));
  // strict admission: the boundary n + l = sqrt(kb(b+2)) has alpha_n = 0 and
  // is not normalizable, so it is excluded.
  int n = static_cast<int>(std::floor(root - l));
  while (n >= 0 && !(n + l < root)) --n;
  while ((n + 1) + l < root) ++n;
  m.n_max = n;
  return m;
}

GmpModel reduce(const PhysicalParams& p) {
  p.validate();
  const double k = 2.0 * p.mu * p.D / (p.a * p.a * p.hbar * p.hbar);
  const double b = std::expm1(p.a * p.r_e);
  return make_model(k, b);
}

int level_count(const GmpModel& m) { return m.n_max; }

LevelRecord level(const GmpModel& m, int n) {
  if (n < 0 || n > m.n_max) {
    throw IndexError("level " + std::to_string(n) + " is not bound (n_max = " +
                     std::to_string(m.n_max) + ")");
  }
  const double X = level_sum(m, n);
  const double alpha = alpha_of(m, static_cast<double>(n));
  const double beta = alpha + X;
  const double eps = m.k - alpha * alpha;
  return LevelRecord{n, alpha, beta, eps, std::nullopt};
}

LevelRecord level(const PhysicalParams& p, int n) {
  const GmpModel m = reduce(p);
  LevelRecord rec = level(m, n);
  // Direct form of the physical energy; agrees with energy_scale()*eps to
  // rounding and is cross-checked in the tests.
  const double X = level_sum(m, n);
  const double S = well_product(m.k, m.b);
  const double t = X - S / X;
  rec.E = p.D - p.a * p.a * p.hbar * p.hbar / (8.0 * p.mu) * t * t;
  return rec;
}

std::vector<LevelRecord> spectrum(const GmpModel& m) {
  std::vector<LevelRecord> out;
  for (int n = 0; n <= m.n_max; ++n) out.push_back(level(m, n));
  return out;
}

std::vector<LevelRecord> spectrum(const PhysicalParams& p) {
  const GmpModel m = reduce(p);
  std::vector<LevelRecord> out;
  for (int n = 0; n <= m.n_max; ++n) out.push_back(level(p, n));
  return out;
}

namespace {

// eps as a function of nu = n + 1/2, sampled in extended precision so that
// high-order finite differences of it stay above the rounding floor.
// With lambda = l - 1/2 one has S - lambda^2 = 2kb - 1/4 exactly, hence
//   alpha(nu) = (2kb - 1/4 - 2 lambda nu - nu^2) / (2 (lambda + nu)).
long double eps_of_nu_ld(const GmpModel& m, long double nu) {
  const long double lambda = static_cast<long double>(m.l) - 0.5L;
  const long double num =
      2.0L * static_cast<long double>(m.k) * static_cast<long double>(m.b) - 0.25L -
      (2.0L * lambda + nu) * nu;
  const long double alpha = num / (2.0L * (lambda + nu));
  return static_cast<long double>(m.k) - alpha * alpha;
}

// Central-difference stencil for the j-th derivative, accuracy O(h^2),
// built by convolving second- and first-derivative atoms.
std::vector<double> central_stencil(int j) {
  std::vector<double> w{1.0};
  auto convolve = [](const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> r(u.size() + v.size() - 1, 0.0);
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t q = 0; q < v.size(); ++q) r[i + q] += u[i] * v[q];
    return r;
  };
  for (int i = 0; i < j / 2; ++i) w = convolve(w, {1.0, -2.0, 1.0});
  if (j % 2 == 1) w = convolve(w, {-0.5, 0.0, 0.5});
  return w;  // offsets run from -(w.size()-1)/2 to +(w.size()-1)/2
}

double derivative_at_zero(const GmpModel& m, int j, double h) {
  const std::vector<double> w = central_stencil(j);
  const int half = static_cast<int>(w.size() - 1) / 2;
  long double acc = 0.0L;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    const long double nu = (static_cast<long double>(i) - half) * static_cast<long double>(h);
    acc += static_cast<long double>(w[i]) * eps_of_nu_ld(m, nu);
  }
  return static_cast<double>(acc / std::pow(static_cast<long double>(h), j));
}

}  // namespace

double energy_of_nu(const GmpModel& m, double nu) {
  return static_cast<double>(eps_of_nu_ld(m, static_cast<long double>(nu)));
}

std::vector<double> dunham_coefficients(const GmpModel& m, int order) {
  if (order < 0) throw DomainError("dunham_coefficients requires order >= 0");
  const double h = 1e-3;
  std::vector<double> eps(order + 1);
  eps[0] = energy_of_nu(m, 0.0);
  for (int j = 1; j <= order; ++j) {
    const double coarse = derivative_at_zero(m, j, h);
    const double fine = derivative_at_zero(m, j, h / 2.0);
    double deriv = (4.0 * fine - coarse) / 3.0;  // Richardson, O(h^2) -> O(h^4)
    double cj = deriv;
    for (int q = 2; q <= j; ++q) cj /= q;  // Taylor coefficient
    eps[j] = (j >= 2 && j % 2 == 0) ? -cj : cj;
  }
  return eps;
}

double morse_eps(double k, int n) {
  if (n < 0) throw DomainError("morse_eps requires n >= 0");
  const double nu = n + 0.5;
  return 2.0 * std::sqrt(k) * nu - nu * nu;
}

double morse_energy(const PhysicalParams& p, int n) {
  p.validate();
  if (n < 0) throw DomainError("morse_energy requires n >= 0");
  const double nu = n + 0.5;
  return std::sqrt(2.0 * p.D / p.mu) * p.a * p.hbar * nu -
         p.a * p.a * p.hbar * p.hbar / (2.0 * p.mu) * nu * nu;
}

}  // namespace gmpot
