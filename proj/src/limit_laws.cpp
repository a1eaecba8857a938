// SPDX-License-Identifier: MIT
#include "telegraph/limit_laws.hpp"

#include <cmath>
#include <stdexcept>

namespace telegraph {

double arcsine_pdf(double y) {
  if (!(y > 0.0 && y < 1.0)) {
    throw std::domain_error("arcsine_pdf: y must lie strictly inside (0,1)");
  }
  return 1.0 / (M_PI * std::sqrt(y * (1.0 - y)));
}

double arcsine_cdf(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("arcsine_cdf: y outside [0,1]");
  return 2.0 / M_PI * std::asin(std::sqrt(y));
}

double q_pdf(double a, double t) {
  if (!(a > 0.0) || !(t > 0.0)) throw std::domain_error("q_pdf: need a > 0, t > 0");
  return a / std::sqrt(2.0 * M_PI * t * t * t) * std::exp(-a * a / (2.0 * t));
}

double y_density(double a, double y, const QuadSpec& spec) {
  if (!(a >= 0.0)) throw std::domain_error("y_density: a must be >= 0");
  if (!(y > 0.0 && y < 1.0)) {
    throw std::domain_error("y_density: y must lie strictly inside (0,1)");
  }
  if (a == 0.0) return arcsine_pdf(y);

  const double one_my = 1.0 - y;
  const double expo = a * a / (2.0 * one_my);
  if (expo > 700.0) return 0.0;  // e^{-r_min^2} underflows; density is dead here

  const double r_min = a / std::sqrt(2.0 * one_my);
  // truncate where e^{-(r^2 - r_min^2)} < e^{-45}
  const double v_max = -r_min + std::sqrt(r_min * r_min + 45.0);

  auto integrand = [a, one_my, r_min](double v) {
    const double r = r_min + v;
    const double gap = std::max(one_my - a * a / (2.0 * r * r), 0.0);
    return std::exp(-v * (2.0 * r_min + v)) / std::sqrt(gap);
  };
  const double integral = integrate(integrand, 0.0, v_max, spec, {true, false});
  return 2.0 / (M_PI * std::sqrt(M_PI * y)) * std::exp(-expo) * integral;
}

MixedLaw y_law(double a, int grid_size, const QuadSpec& spec) {
  if (!(a >= 0.0)) throw std::domain_error("y_law: a must be >= 0");
  nlohmann::json params = {{"law", "y"}, {"a", a}};

  if (a == 0.0) {
    return MixedLaw::from_density({}, [](double y) { return arcsine_pdf(y); }, 0.0,
                                  1.0, grid_size, {true, true}, spec,
                                  std::move(params));
  }
  std::vector<Atom> atoms{{0.0, gauss_tail(a)}};
  return MixedLaw::from_density(
      std::move(atoms), [a, spec](double y) { return y_density(a, y, spec); }, 0.0,
      1.0, grid_size, {true, true}, spec, std::move(params));
}

MixedLaw limit_law(const LimitLawSpec& spec, const QuadSpec& quad) {
  if (!std::isfinite(spec.a)) throw std::domain_error("limit_law: a must be finite");
  nlohmann::json params = {{"law", "limit"}, {"a", spec.a}};
  if (spec.a <= 0.0) {
    MixedLaw law = y_law(-spec.a, spec.grid_size, quad);
    law.set_params(std::move(params));
    return law;
  }
  MixedLaw law = y_law(spec.a, spec.grid_size, quad).reflected();
  law.set_params(std::move(params));
  return law;
}

}  // namespace telegraph
