// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "telegraph/telegraph_laws.hpp"

using namespace telegraph;

TEST_CASE("phi: anchor values") {
  CHECK(phi(3.7, 0.0) == 0.5);
  CHECK(phi(1e-8, 0.0) == 0.5);

  // the atom of the T=1000 reference experiment: 2 phi = 0.025 to 2 s.f.
  CHECK(std::abs(2.0 * phi(1000.0, 1.0) - 0.025) < 5e-4);
  // and the tenfold horizon: 0.008 to 1 s.f.
  CHECK(std::abs(2.0 * phi(10000.0, 1.0) - 0.008) < 5e-4);

  CHECK_THROWS_AS(phi(1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(phi(-1.0, 0.1), std::domain_error);
}

TEST_CASE("phi: scaling relation phi_{aT}(t) = phi_T(a t)") {
  const double alpha = 3.7, lt = 2.0, t = 0.4;
  CHECK(phi(alpha * lt, t) == doctest::Approx(phi(lt, alpha * t)).epsilon(1e-14));
}

TEST_CASE("phi equals its defining integral") {
  for (double lt : {0.1, 1.0, 10.0, 1000.0}) {
    for (double t : {0.1, 0.5, 1.0}) {
      CHECK(std::abs(phi(lt, t) - phi_integral_oracle(lt, t)) < 1e-8);
    }
  }
  // continuity at zero: the integral representation tends to 1/2
  CHECK(std::abs(phi_integral_oracle(0.01, 1e-6) - 0.5) < 1e-4);
}

TEST_CASE("psi: symmetry, endpoint value, total mass") {
  // dyadic complements are exact in floating point, so symmetry is bitwise
  CHECK(psi(2.0, 0.25) == psi(2.0, 0.75));
  CHECK(psi(17.3, 0.0078125) == psi(17.3, 1.0 - 0.0078125));
  // non-dyadic pairs agree to rounding
  CHECK(psi(2.0, 0.3) == doctest::Approx(psi(2.0, 0.7)).epsilon(1e-14));

  // psi(0) = lambda T phi(1), forced by phi(0) = 1/2
  for (double lt : {0.5, 3.0, 42.0}) {
    CHECK(psi(lt, 0.0) == lt * phi(lt, 1.0));
  }

  // atom + density carry the full mass at lambda T = 1000
  const double cont = integrate([](double y) { return psi(1000.0, y); }, 0.0, 1.0,
                                {1e-10, 1e-10, 400});
  CHECK(std::abs(2.0 * phi(1000.0, 1.0) + cont - 1.0) < 1e-6);

  CHECK_THROWS_AS(psi(1.0, 1.2), std::domain_error);
}

TEST_CASE("origin law: atoms land per initial velocity, mass is one") {
  TelegraphParams p{1.0, 1.0, 1000.0, Velocity::Plus};
  MixedLaw plus = origin_law(p, 256);
  CHECK(std::abs(plus.atom_mass_at(1.0) - 0.025) < 5e-4);
  CHECK(plus.atom_mass_at(0.0) == 0.0);
  CHECK(plus.total_mass() == doctest::Approx(1.0).epsilon(1e-6));

  p.T = 10000.0;
  CHECK(std::abs(origin_law(p, 256).atom_mass_at(1.0) - 0.008) < 5e-4);

  p.T = 50.0;
  p.v0 = Velocity::Symmetric;
  MixedLaw sym = origin_law(p, 256);
  CHECK(sym.atom_mass_at(0.0) == doctest::Approx(sym.atom_mass_at(1.0)));
  CHECK(sym.total_mass() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("origin law: Minus equals Plus reflected") {
  TelegraphParams p{0.7, 1.3, 20.0, Velocity::Plus};
  MixedLaw plus = origin_law(p, 256);
  p.v0 = Velocity::Minus;
  MixedLaw minus = origin_law(p, 256);
  MixedLaw mirrored = plus.reflected();
  CHECK(minus.atom_mass_at(0.0) == mirrored.atom_mass_at(0.0));
  for (double y : {0.1, 0.4, 0.65, 0.9}) {
    CHECK(minus.cdf(y) == doctest::Approx(mirrored.cdf(y)).epsilon(1e-9));
  }
}

TEST_CASE("origin law box probabilities reproduce the reference experiment") {
  TelegraphParams p{1.0, 1.0, 1000.0, Velocity::Plus};
  MixedLaw law = origin_law(p);
  CHECK(std::abs(box_probability(law, 0.99, 1.0) - 0.077) < 5e-4);
  CHECK(std::abs(box_probability(law, 0.0, 0.01) - 0.052) < 5e-4);

  p.T = 10000.0;
  MixedLaw law10 = origin_law(p);
  CHECK(std::abs(box_probability(law10, 0.99, 1.0) - 0.068) < 5e-4);
  CHECK(std::abs(box_probability(law10, 0.0, 0.01) - 0.060) < 5e-4);
}

TEST_CASE("hitting law: atom, limit values, normalization") {
  TelegraphParams p{1.0, 1.0, 10.0, Velocity::Plus};
  HittingLaw plus = hitting_law(p, -1.0);
  CHECK(plus.t0 == 1.0);
  CHECK(plus.atom_at_t0 == doctest::Approx(std::exp(-1.0)));
  // Q+(T0) = lambda^2 T0 e^{-lambda T0} / 2, via the I1(z)/z limit
  CHECK(plus.density(1.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-12));

  p.v0 = Velocity::Minus;
  HittingLaw minus = hitting_law(p, -1.0);
  CHECK(minus.atom_at_t0 == 0.0);
  // Q-(T0) = lambda e^{-lambda T0} / 2: half the Plus rate, the first move
  // points away from the level
  CHECK(minus.density(1.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-12));

  for (double t0 : {0.1, 1.0, 5.0}) {
    for (double lambda : {0.5, 1.0, 5.0}) {
      TelegraphParams q{lambda, 1.0, 10.0, Velocity::Plus};
      const double U = t0 + 60.0 / lambda;
      CHECK(std::abs(hitting_law(q, -t0).total_mass(U) - 1.0) < 1e-6);
      q.v0 = Velocity::Minus;
      CHECK(std::abs(hitting_law(q, -t0).total_mass(U) - 1.0) < 1e-6);
    }
  }

  CHECK_THROWS_AS(hitting_law(p, 1.0), std::domain_error);
  p.v0 = Velocity::Symmetric;
  CHECK_THROWS_AS(hitting_law(p, -1.0), std::domain_error);
}

TEST_CASE("offset law: sub-threshold horizon is a unit atom at zero") {
  for (Velocity v : {Velocity::Plus, Velocity::Minus, Velocity::Symmetric}) {
    TelegraphParams p{1.0, 1.0, 1.5, v};
    MixedLaw law = offset_law(p, -2.0, 64);
    CHECK(law.atom_mass_at(0.0) == 1.0);
    CHECK(law.total_mass() == 1.0);
    // T == T0 exactly also degenerates
    p.T = 2.0;
    CHECK(offset_law(p, -2.0, 64).atom_mass_at(0.0) == 1.0);
  }
}

TEST_CASE("offset law: normalization and structure for x < 0") {
  TelegraphParams p{1.0, 1.0, 5.0, Velocity::Plus};
  MixedLaw law = offset_law(p, -1.0, 256);
  CHECK(law.total_mass() == doctest::Approx(1.0).epsilon(1e-5));

  // ballistic atom p at 1 - T0/T with mass 2 e^{-lambda T0} phi_{T-T0}(1)
  const double y_top = 1.0 - 1.0 / 5.0;
  CHECK(law.atom_mass_at(y_top) ==
        doctest::Approx(2.0 * std::exp(-1.0) * phi(4.0, 1.0)).epsilon(1e-12));
  CHECK(law.atom_mass_at(0.0) > 0.0);
  // no continuous mass above the support
  CHECK(law.cdf(y_top) == doctest::Approx(1.0).epsilon(1e-5));

  p.v0 = Velocity::Minus;
  MixedLaw lm = offset_law(p, -1.0, 256);
  CHECK(lm.total_mass() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(lm.atom_mass_at(y_top) == 0.0);

  p.v0 = Velocity::Symmetric;
  MixedLaw ls = offset_law(p, -1.0, 256);
  CHECK(ls.total_mass() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(ls.atom_mass_at(y_top) ==
        doctest::Approx(0.5 * law.atom_mass_at(y_top)).epsilon(1e-12));
}

TEST_CASE("offset law: duality between (x, Plus) and (-x, Minus)") {
  TelegraphParams p{1.0, 1.0, 5.0, Velocity::Plus};
  MixedLaw right_minus = [&] {
    TelegraphParams q = p;
    q.v0 = Velocity::Minus;
    return offset_law(q, 1.0, 256);
  }();
  MixedLaw left_plus = offset_law(p, -1.0, 256);

  for (int k = 1; k <= 10; ++k) {
    const double y = k / 11.0;
    CHECK(right_minus.cdf(y) ==
          doctest::Approx(1.0 - left_plus.cdf_left(1.0 - y)).epsilon(1e-5));
  }
  // reflected support: atoms moved to 1 and T0/T
  CHECK(right_minus.atom_mass_at(1.0) == left_plus.atom_mass_at(0.0));
  CHECK(right_minus.atom_mass_at(1.0 - 0.8) ==
        doctest::Approx(left_plus.atom_mass_at(0.8)));

  CHECK_THROWS_AS(offset_law(p, 0.0, 256), std::domain_error);
}

TEST_CASE("telegraph expectation: constants, d'Alembert limit") {
  TelegraphParams p{1.0, 1.0, 10.0, Velocity::Symmetric};
  CHECK(telegraph_expectation(p, [](double) { return 1.0; }, 0.0, 2.0) ==
        doctest::Approx(1.0).epsilon(1e-8));

  // lambda -> 0 reduces to the half-sum of travelling waves
  TelegraphParams q{1e-10, 1.0, 10.0, Velocity::Symmetric};
  const double got =
      telegraph_expectation(q, [](double u) { return std::cos(u); }, 0.3, 1.0);
  const double dalembert = 0.5 * (std::cos(0.3 + 1.0) + std::cos(0.3 - 1.0));
  CHECK(std::abs(got - dalembert) < 1e-6);

  // solution stays inside the range of g0
  const double v = telegraph_expectation(p, [](double u) { return std::cos(u); }, 0.0, 1.0);
  CHECK(v <= 1.0);
  CHECK(v >= -1.0);

  TelegraphParams bad = p;
  bad.v0 = Velocity::Plus;
  CHECK_THROWS_AS(telegraph_expectation(bad, [](double) { return 1.0; }, 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("mixed-law mass across the parameter grid") {
  for (double lambda : {0.5, 1.0, 5.0}) {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double T : {1.0, 10.0, 100.0}) {
        TelegraphParams p{lambda, c, T, Velocity::Plus};
        CHECK(origin_law(p, 128).total_mass() == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
}
