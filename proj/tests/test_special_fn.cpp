// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "telegraph/special_fn.hpp"

using namespace telegraph;

namespace {

// Independent long-double power-series oracle for e^{-z} I_nu(z). Valid up
// to z ~ 1.1e4 (e^z stays inside long double range), so it covers both the
// series and the asymptotic branches of the implementation.
long double bessel_scaled_oracle(long double z, int nu) {
  const long double q = 0.25L * z * z;
  long double term = (nu == 0) ? 1.0L : 0.5L * z;
  long double sum = term;
  for (int n = 1; n < 40000; ++n) {
    term *= q / (static_cast<long double>(n) * (n + nu));
    sum += term;
    if (term < sum * 1e-22L) break;
  }
  return std::exp(-z) * sum;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("scaled I0: pinned values and oracle agreement") {
  CHECK(bessel_i0_scaled(0.0) == 1.0);

  // series summed to 30 terms at z=1, times e^{-1}
  long double s = 0.0L;
  long double t = 1.0L;
  for (int n = 0; n < 30; ++n) {
    if (n > 0) t *= 0.25L / (static_cast<long double>(n) * n);
    s += t;
  }
  const double i0_at_1 = static_cast<double>(std::exp(-1.0L) * s);
  CHECK(rel_err(bessel_i0_scaled(1.0), i0_at_1) < 1e-12);
  CHECK(bessel_i0_scaled(1.0) == doctest::Approx(0.4657596).epsilon(1e-6));

  // large argument: leading asymptotic with one correction
  CHECK(bessel_i0_scaled(1000.0) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * 1000.0) * (1.0 + 1.0 / 8000.0))
            .epsilon(1e-6));

  for (double z : {0.3, 1.0, 5.0, 12.0, 29.5, 30.5, 33.0, 40.0, 100.0, 1000.0, 1e4}) {
    CHECK(rel_err(bessel_i0_scaled(z), static_cast<double>(bessel_scaled_oracle(z, 0))) <
          1e-12);
  }
}

TEST_CASE("scaled I1: pinned values, small-z limit, oracle agreement") {
  CHECK(bessel_i1_scaled(0.0) == 0.0);
  CHECK(bessel_i1_scaled(1.0) == doctest::Approx(0.2079104).epsilon(1e-6));
  CHECK(rel_err(bessel_i1_scaled(1.0), static_cast<double>(bessel_scaled_oracle(1.0L, 1))) <
        1e-12);

  for (double z : {1e-12, 1e-9, 1e-6, 1e-3}) {
    CHECK(bessel_i1_scaled(z) / z == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(bessel_i1_scaled_over_z(z) == doctest::Approx(0.5).epsilon(1e-3));
  }
  CHECK(bessel_i1_scaled_over_z(0.0) == 0.5);

  for (double z : {0.5, 3.0, 28.0, 31.0, 50.0, 500.0, 1e4}) {
    CHECK(rel_err(bessel_i1_scaled(z), static_cast<double>(bessel_scaled_oracle(z, 1))) <
          1e-12);
    CHECK(rel_err(bessel_i1_scaled_over_z(z),
                  static_cast<double>(bessel_scaled_oracle(z, 1) / z)) < 1e-12);
  }
}

TEST_CASE("regime crossover: series and asymptotic overlap near z = 30") {
  // both branches must agree with the high-precision oracle through the switch
  for (double z = 25.0; z <= 35.0; z += 0.5) {
    CHECK(rel_err(bessel_i0_scaled(z), static_cast<double>(bessel_scaled_oracle(z, 0))) <
          1e-12);
    CHECK(rel_err(bessel_i1_scaled(z), static_cast<double>(bessel_scaled_oracle(z, 1))) <
          1e-12);
  }
}

TEST_CASE("ordering 0 <= i1s < i0s <= 1 and monotone decay of i0s") {
  double prev = 2.0;
  for (int k = 0; k <= 1000; ++k) {
    const double z = 1e4 * k / 1000.0;
    const double a = bessel_i0_scaled(z);
    const double b = bessel_i1_scaled(z);
    CHECK(a <= 1.0);
    CHECK(b >= 0.0);
    CHECK(b < a);
    CHECK(a < prev);
    prev = a;
  }
}

TEST_CASE("derivative identity d/dz e^{-z}I0 = e^{-z}(I1 - I0)") {
  for (double z : {0.5, 5.0, 50.0, 500.0}) {
    const double h = 1e-5 * std::max(1.0, z);
    const double numeric =
        (bessel_i0_scaled(z + h) - bessel_i0_scaled(z - h)) / (2.0 * h);
    const double exact = bessel_i1_scaled(z) - bessel_i0_scaled(z);
    CHECK(std::abs(numeric - exact) < 1e-6);
  }
}

TEST_CASE("bessel domain errors") {
  CHECK_THROWS_AS(bessel_i0_scaled(-1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_i1_scaled(-1e-9), std::domain_error);
  CHECK_THROWS_AS(bessel_i0_scaled(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(bessel_i0_scaled(std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("gauss_tail: values, limit and monotonicity") {
  CHECK(gauss_tail(0.0) == 0.0);

  // independent quadrature oracle: 2/sqrt(2 pi) * int_0^1 exp(-y^2/2) dy
  const double by_quadrature =
      2.0 / std::sqrt(2.0 * M_PI) *
      integrate([](double y) { return std::exp(-0.5 * y * y); }, 0.0, 1.0);
  CHECK(gauss_tail(1.0) == doctest::Approx(by_quadrature).epsilon(1e-12));
  CHECK(gauss_tail(1.0) == doctest::Approx(0.682689).epsilon(1e-6));

  CHECK(std::abs(gauss_tail(40.0) - 1.0) < 1e-12);

  double prev = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double v = gauss_tail(5.0 * k / 1000.0);
    CHECK(v >= prev);
    CHECK(v < 1.0);
    prev = v;
  }
  CHECK_THROWS_AS(gauss_tail(-0.1), std::domain_error);
}

TEST_CASE("integrate: reference values") {
  // arcsine normalization
  const double arcsine_norm = integrate(
      [](double y) { return 1.0 / std::sqrt(y * (1.0 - y)); }, 0.0, 1.0, {},
      {true, true});
  CHECK(arcsine_norm == doctest::Approx(M_PI).epsilon(1e-10));

  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0));

  // Gamma(1/2) with the tail truncated at 50
  const double gamma_half = integrate(
      [](double t) { return std::exp(-t) / std::sqrt(t); }, 0.0, 50.0, {},
      {true, false});
  CHECK(std::abs(gamma_half - std::sqrt(M_PI)) < 1e-9);
}

TEST_CASE("integrate: flagged endpoints agree with manual substitution") {
  // random smooth-times-singular integrands f(y) = s(y) / sqrt(y - a)
  std::mt19937_64 rng(20240814);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> ab(0.0, 1.0);

  for (int trial = 0; trial < 20; ++trial) {
    const double a = 3.0 * ab(rng);
    const double b = a + 0.5 + 2.0 * ab(rng);
    const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), w = 1.0 + ab(rng);
    auto smooth = [=](double y) { return c0 + c1 * y + c2 * std::cos(w * y); };
    const bool left = trial % 2 == 0;

    auto f = left ? std::function<double(double)>(
                        [=](double y) { return smooth(y) / std::sqrt(y - a); })
                  : std::function<double(double)>(
                        [=](double y) { return smooth(y) / std::sqrt(b - y); });

    const double flagged = integrate(f, a, b, {}, {left, !left});

    // substitute by hand: y = a + v^2 (resp. b - v^2)
    auto g = left ? std::function<double(double)>(
                        [=](double v) { return 2.0 * smooth(a + v * v); })
                  : std::function<double(double)>(
                        [=](double v) { return 2.0 * smooth(b - v * v); });
    const double manual = integrate(g, 0.0, std::sqrt(b - a));

    CHECK(std::abs(flagged - manual) < 1e-9);
  }
}

TEST_CASE("integrate: convergence failure carries best estimate") {
  QuadSpec tight;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  tight.max_subdivisions = 4;
  bool thrown = false;
  try {
    integrate([](double y) { return std::cos(50.0 * y * y); }, 0.0, 6.0, tight);
  } catch (const ConvergenceError& e) {
    thrown = true;
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.error_bound() > 1e-14);
  }
  CHECK(thrown);

  CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 1.0, 0.0), std::domain_error);
}

TEST_CASE("gauss_legendre_16 is exact on smooth segments") {
  const double got = gauss_legendre_16([](double x) { return std::cos(x); }, 0.2, 0.9);
  CHECK(got == doctest::Approx(std::sin(0.9) - std::sin(0.2)).epsilon(1e-14));

  // degree-15 polynomial integrated exactly
  auto p = [](double x) { return std::pow(x, 15) - 3.0 * std::pow(x, 7) + x; };
  const double exact = (std::pow(2.0, 16) - 1.0) / 16.0 -
                       3.0 * (std::pow(2.0, 8) - 1.0) / 8.0 + (4.0 - 1.0) / 2.0;
  CHECK(gauss_legendre_16(p, 1.0, 2.0) == doctest::Approx(exact).epsilon(1e-13));
}
