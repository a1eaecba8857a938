// SPDX-License-Identifier: MIT
#pragma once

#include "telegraph/mixed_law.hpp"
#include "telegraph/special_fn.hpp"

// Long-horizon limit laws of the occupation fraction: the arcsine law at the
// origin and the Y_a family (Gaussian atom at 0 plus a defective arcsine
// convolved with the Brownian first-passage density) for starts a grid-widths
// away, reflected for positive a.

namespace telegraph {

struct LimitLawSpec {
  double a = 0.0;       // limit of (c^2 T / lambda)^{-1/2} x
  int grid_size = 512;
};

/// 1 / (pi sqrt(y (1-y))) on (0,1); poles at the endpoints are a domain error.
double arcsine_pdf(double y);

/// (2/pi) arcsin(sqrt(y)) on [0,1].
double arcsine_cdf(double y);

/// Brownian first-passage density of level a: a / sqrt(2 pi t^3) e^{-a^2/2t}.
double q_pdf(double a, double t);

/// Density f_a(y) of the absolutely continuous part of Y_a (a > 0).
/// Evaluated from the explicit u-integral after the substitution
/// u = a^2/(2 r^2), which turns the essential-singularity spike at u ~ a^2/3
/// into a Gaussian tail starting at r_min = a / sqrt(2(1-y)):
///   f_a(y) = 2 / (pi^{3/2} sqrt(y)) * Int_{r_min}^inf e^{-r^2}
///            (1 - y - a^2/(2 r^2))^{-1/2} dr.
double y_density(double a, double y, const QuadSpec& spec = {});

/// Law of Y_a: a = 0 is the plain arcsine law; a > 0 carries the atom
/// m_a = gauss_tail(a) at zero plus the f_a density.
MixedLaw y_law(double a, int grid_size = 512, const QuadSpec& spec = {});

/// Long-horizon limit law: Y_{-a} for a <= 0, the reflection 1 - Y_a for a >= 0
/// (both branches agree at a = 0, the arcsine law).
MixedLaw limit_law(const LimitLawSpec& spec, const QuadSpec& quad = {});

}  // namespace telegraph
