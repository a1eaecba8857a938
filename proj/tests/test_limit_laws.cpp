// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "telegraph/limit_laws.hpp"

using namespace telegraph;

TEST_CASE("arcsine pdf/cdf anchors") {
  CHECK(arcsine_cdf(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(arcsine_pdf(0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-15));
  CHECK(arcsine_cdf(0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(arcsine_cdf(0.0) == 0.0);
  CHECK(arcsine_cdf(1.0) == 1.0);
  CHECK_THROWS_AS(arcsine_pdf(0.0), std::domain_error);
  CHECK_THROWS_AS(arcsine_pdf(1.0), std::domain_error);
  CHECK_THROWS_AS(arcsine_cdf(-0.1), std::domain_error);
}

TEST_CASE("q_pdf: mass, mode, Laplace transform") {
  // total mass with the truncated tail accounted for exactly:
  // Int_U^inf q_a = gauss_tail(a / sqrt(U))
  const double U = 1e4;
  const double finite = integrate([](double t) { return q_pdf(1.0, t); }, 1e-6, U,
                                  {1e-12, 1e-10, 400});
  CHECK(std::abs(finite + gauss_tail(1.0 / std::sqrt(U)) - 1.0) < 1e-6);
  CHECK(std::abs(finite - 1.0) < 0.01);  // slow sqrt-tail convergence to 1

  // mode of q_a at t = a^2/3 by grid search, a = 2
  double best_t = 0.0, best = -1.0;
  for (double t = 0.5; t <= 3.0; t += 1e-3) {
    const double v = q_pdf(2.0, t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  CHECK(std::abs(best_t - 4.0 / 3.0) < 2e-3);

  // Int e^{-st} q_a dt = e^{-a sqrt(2s)} at a=1, s=2
  const double s = 2.0;
  const double lhs = integrate([s](double t) { return std::exp(-s * t) * q_pdf(1.0, t); },
                               1e-9, 40.0, {1e-12, 1e-10, 400});
  CHECK(std::abs(lhs - std::exp(-std::sqrt(2.0 * s))) < 1e-6);

  CHECK_THROWS_AS(q_pdf(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(q_pdf(1.0, 0.0), std::domain_error);
}

TEST_CASE("y_density reduces to the arcsine density as a -> 0") {
  for (double y : {0.1, 0.5, 0.9}) {
    CHECK(y_density(1e-8, y) == doctest::Approx(arcsine_pdf(y)).epsilon(1e-5));
  }
}

TEST_CASE("y_law: atom mass, normalization, shape") {
  MixedLaw l0 = y_law(0.0, 256);
  CHECK(l0.atoms().empty());
  for (double y : {0.2, 0.5, 0.7}) {
    CHECK(l0.pdf(y) == doctest::Approx(arcsine_pdf(y)).epsilon(1e-12));
  }
  CHECK(l0.total_mass() == doctest::Approx(1.0).epsilon(1e-7));

  MixedLaw l1 = y_law(1.0, 256);
  CHECK(l1.atom_mass_at(0.0) == doctest::Approx(0.682689).epsilon(1e-6));
  CHECK(l1.atom_mass_at(0.0) == gauss_tail(1.0));

  for (double a : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    CHECK(y_law(a, 256).total_mass() == doctest::Approx(1.0).epsilon(1e-6));
  }

  // support shrinks toward 0: the density dies at the right edge
  CHECK(y_density(1.0, 0.999) < y_density(1.0, 0.5));

  // weak continuity at a -> 0+
  CHECK(sup_distance(y_law(0.01, 256), l0) < 0.02);
}

TEST_CASE("limit law: arcsine at zero, atom placement, mirror identity") {
  MixedLaw center = limit_law({0.0, 256});
  CHECK(center.atoms().empty());
  CHECK(center.pdf(0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-12));

  MixedLaw lm = limit_law({-1.0, 256});
  CHECK(lm.atom_mass_at(0.0) == doctest::Approx(0.6827).epsilon(1e-4));

  MixedLaw lp = limit_law({1.0, 256});
  CHECK(lp.atom_mass_at(1.0) == doctest::Approx(0.6827).epsilon(1e-4));
  // density of 1 - Y_a is f_a reflected
  CHECK(lp.pdf(0.3) == doctest::Approx(y_density(1.0, 0.7)).epsilon(1e-12));

  for (double a : {0.5, 1.0, 2.0}) {
    MixedLaw pos = limit_law({a, 128});
    MixedLaw neg = limit_law({-a, 128});
    for (int k = 0; k <= 50; ++k) {
      const double y = k / 50.0;
      CHECK(pos.cdf(y) ==
            doctest::Approx(1.0 - neg.cdf_left(1.0 - y)).epsilon(1e-9).scale(1.0));
    }
  }
}
