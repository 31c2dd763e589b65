#include <cmath>

#include <doctest.h>

#include "gmpot/core.hpp"
#include "gmpot/errors.hpp"
#include "oracles.hpp"

using namespace gmpot;

namespace {
// reference values computed once with 50-digit arithmetic
constexpr double kLA = 4.531128874149275;        // l for (k=4, b=2)
constexpr double kAlpha0A = 1.2655644370746374;  // alpha_0
constexpr double kEps0A = 2.398346655611956;
constexpr double kEps1A = 3.983831790034182;
constexpr double kBF = 11.182493960703473;  // e^2.5 - 1
constexpr double kLF = 50.51213276419426;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }
}  // namespace

TEST_CASE("reduce: documented parameter sets") {
  const GmpModel f = reduce(PhysicalParams{10.0, 1.0, 2.5, 1.0, 1.0});
  CHECK(f.k == doctest::Approx(20.0).epsilon(1e-15));
  CHECK(rel(f.b, kBF) < 1e-15);
  CHECK(rel(f.l, kLF) < 1e-14);
  CHECK(f.n_max == 3);

  // inverse of the definition: D chosen so k = 4, r_e chosen so b = 2
  const GmpModel a = reduce(PhysicalParams{2.0, 1.0, std::log(3.0), 1.0, 1.0});
  CHECK(rel(a.k, 4.0) < 1e-14);
  CHECK(rel(a.b, 2.0) < 1e-14);
}

TEST_CASE("reduce: non-positive parameters are rejected") {
  CHECK_THROWS_AS(reduce(PhysicalParams{-1.0, 1.0, 1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(reduce(PhysicalParams{1.0, 0.0, 1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(reduce(PhysicalParams{1.0, 1.0, -2.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(reduce(PhysicalParams{1.0, 1.0, 1.0, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(reduce(PhysicalParams{1.0, 1.0, 1.0, 1.0, -1.0}), DomainError);
}

TEST_CASE("shape constants") {
  const auto [l, C] = shape_constants(4.0, 2.0);
  CHECK(C == -16.0);
  CHECK(rel(l, 0.5 * (1.0 + std::sqrt(65.0))) < 1e-15);
  CHECK(rel(l * (l - 1.0), 16.0) < 1e-14);

  // 4 k b^2 = 3 makes the square root exactly 2
  const auto [l32, C32] = shape_constants(0.75, 1.0);
  CHECK(l32 == 1.5);
  CHECK(C32 == -0.75);

  const auto [lf, Cf] = shape_constants(20.0, kBF);
  CHECK(rel(lf, kLF) < 1e-14);
  CHECK(rel(Cf, -2500.9634236233931) < 1e-14);

  CHECK_THROWS_AS(shape_constants(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(shape_constants(1.0, -1.0), DomainError);
}

TEST_CASE("level_count: strict admission") {
  CHECK(make_model(4.0, 2.0).n_max == 1);
  CHECK(make_model(20.0, kBF).n_max == 3);
  // sqrt(k b (b+2)) <= l: no bound states, encoded as -1 rather than an error
  CHECK(make_model(0.1, 0.1).n_max == -1);
  // (k, b) = (1/2, 2) puts sqrt(k b (b+2)) = l = 2 exactly; the boundary
  // level has alpha = 0 and is excluded by the strict inequality
  CHECK(make_model(0.5, 2.0).n_max == -1);
}

TEST_CASE("level: exponents and energies") {
  const GmpModel m = make_model(4.0, 2.0);
  const LevelRecord l0 = level(m, 0);
  CHECK(rel(l0.alpha, kAlpha0A) < 1e-14);
  CHECK(rel(l0.eps, kEps0A) < 1e-14);
  CHECK(!l0.E.has_value());

  const LevelRecord l1 = level(m, 1);
  CHECK(std::abs((l1.beta - l1.alpha) - (1.0 + m.l)) <= 1e-15 * (1.0 + m.l));
  CHECK(rel(l1.eps, kEps1A) < 1e-14);

  CHECK_THROWS_AS(level(m, 2), IndexError);
  CHECK_THROWS_AS(level(m, -1), IndexError);
}

TEST_CASE("level: four monotone energies for the deep reference model") {
  const PhysicalParams p{10.0, 1.0, 2.5, 1.0, 1.0};
  const GmpModel m = reduce(p);
  const double eps_expect[4] = {4.5735912023651814, 11.814071574379511, 16.701624259855530,
                                19.373451974505995};
  const double e_expect[4] = {2.2867956011825907, 5.9070357871897553, 8.3508121299277648,
                              9.6867259872529973};
  double prev = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const LevelRecord lv = level(p, n);
    CHECK(lv.eps > prev);
    CHECK(lv.eps < m.k);
    CHECK(rel(lv.eps, eps_expect[n]) < 1e-13);
    CHECK(rel(*lv.E, e_expect[n]) < 1e-13);
    // the two energy routes agree
    CHECK(rel(*lv.E, p.energy_scale() * lv.eps) < 1e-12);
    prev = lv.eps;
  }
}

TEST_CASE("exponent identities hold for every bound level") {
  for (const GmpModel m : {make_model(4.0, 2.0), make_model(20.0, kBF)}) {
    const double S = m.k * m.b * (m.b + 2.0);
    for (int n = 0; n <= m.n_max; ++n) {
      const LevelRecord lv = level(m, n);
      CHECK(rel(lv.beta - lv.alpha, n + m.l) < 1e-12);
      CHECK(rel(lv.beta * lv.beta - lv.alpha * lv.alpha, S) < 1e-12);
      CHECK(lv.alpha > 0.0);
      CHECK(lv.alpha < lv.beta);
    }
  }
}

TEST_CASE("dunham coefficients match the hand-differentiated closed form") {
  const GmpModel m = make_model(4.0, 2.0);
  const std::vector<double> got = dunham_coefficients(m, 4);
  const std::vector<double> want = oracles::dunham_closed_form(4.0, 2.0, 4);
  CHECK(got[0] == energy_of_nu(m, 0.0));  // eps(0) is the direct evaluation at nu = 0
  // the closed-form oracle cancels ~20 down to ~0.18, so allow its rounding
  CHECK(rel(got[0], want[0]) < 1e-13);
  CHECK(rel(got[1], want[1]) < 1e-9);
  CHECK(rel(got[2], want[2]) < 1e-8);
  CHECK(rel(got[3], want[3]) < 1e-6);
  CHECK(rel(got[4], want[4]) < 1e-3);

  // frozen spot values
  CHECK(rel(want[0], 0.18365384615384615) < 1e-13);
  CHECK(rel(got[1], 5.8005320687314831) < 1e-9);
  CHECK(rel(got[3], 0.96198110840690715) < 1e-6);

  CHECK_THROWS_AS(dunham_coefficients(m, -1), DomainError);
}

TEST_CASE("dunham: two-term limit at large b") {
  // the linear and quadratic coefficients approach the two-term form
  const std::vector<double> e3 = dunham_coefficients(make_model(20.0, 1e3), 2);
  const std::vector<double> e4 = dunham_coefficients(make_model(20.0, 1e4), 2);
  const double sk2 = 2.0 * std::sqrt(20.0);
  CHECK(std::abs(e4[1] - sk2) < 2e-3);
  CHECK(std::abs(e4[2] - 1.0) < 1e-3);
  CHECK(std::abs(e4[1] - sk2) < std::abs(e3[1] - sk2));
  CHECK(std::abs(e4[2] - 1.0) < std::abs(e3[2] - 1.0));

  // higher corrections die off as b grows
  double prev = 1e300;
  for (const double b : {10.0, 100.0, 1000.0}) {
    const double c3 = std::abs(dunham_coefficients(make_model(20.0, b), 3)[3]);
    CHECK(c3 < prev);
    prev = c3;
  }
}

TEST_CASE("dunham: partial sum reproduces the ground level within the cubic bound") {
  for (const GmpModel m : {make_model(4.0, 2.0), make_model(20.0, kBF)}) {
    const std::vector<double> eps = dunham_coefficients(m, 3);
    const double partial = eps[0] + 0.5 * eps[1] - 0.25 * eps[2];
    CHECK(std::abs(level(m, 0).eps - partial) <= std::abs(eps[3]) * 0.125 * 4.0);
  }
}

TEST_CASE("morse energies") {
  CHECK(morse_eps(4.0, 0) == 1.75);
  CHECK(morse_eps(25.0, 2) == 18.75);
  CHECK_THROWS_AS(morse_eps(4.0, -1), DomainError);

  const PhysicalParams p{10.0, 1.0, 2.5, 1.0, 1.0};
  CHECK(rel(morse_energy(p, 0), p.energy_scale() * morse_eps(reduce(p).k, 0)) < 1e-14);

  // gap to the full spectrum shrinks with b at fixed k
  const double g3 = std::abs(level(make_model(20.0, 1e3), 0).eps - morse_eps(20.0, 0));
  const double g4 = std::abs(level(make_model(20.0, 1e4), 0).eps - morse_eps(20.0, 0));
  CHECK(g4 < g3);
}

TEST_CASE("morse limit: scaled gap stays bounded over the sweep") {
  for (int n = 0; n <= 2; ++n) {
    double prev = 1e300, lo = 1e300, hi = 0.0;
    for (const double b : {1e2, 1e3, 1e4}) {
      const double gap = std::abs(level(make_model(20.0, b), n).eps - morse_eps(20.0, n));
      CHECK(gap < prev);
      prev = gap;
      lo = std::min(lo, b * gap);
      hi = std::max(hi, b * gap);
    }
    CHECK(hi / lo < 4.0);
  }
}

TEST_CASE("potential evaluators") {
  const GmpModel m = make_model(4.0, 2.0);
  // minimum sits at x = ln(1+b) and vanishes there
  CHECK(std::abs(m.potential(std::log1p(m.b))) < 1e-14);
  CHECK(rel(m.potential(50.0), m.k) < 1e-12);
  CHECK_THROWS_AS(m.potential(0.0), DomainError);

  const PhysicalParams p{10.0, 1.0, 2.5, 1.0, 1.0};
  CHECK(p.potential(p.r_e) == 0.0);
  CHECK(p.morse_potential(p.r_e) == 0.0);
  // the true interaction diverges like D b^2/(a r)^2 at the origin; the
  // two-term form stays finite there
  CHECK(p.potential(1e-6) > 1e10);
  const double b = p.b_shape();
  CHECK(rel(p.potential(1e-6) * std::pow(p.a * 1e-6, 2), p.D * b * b) < 1e-3);
  CHECK(p.morse_potential(1e-6) < 2.0 * p.D * std::exp(2.0 * p.a * p.r_e));
}

TEST_CASE("model validation basics") {
  const GmpModel m = make_model(4.0, 2.0);
  CHECK(rel(m.l, kLA) < 1e-15);
  CHECK(m.C == -16.0);
  CHECK(rel(m.l * (m.l - 1.0), -m.C) < 1e-14);
  CHECK(level_count(m) == m.n_max);
}
