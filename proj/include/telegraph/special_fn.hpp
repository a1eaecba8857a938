// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <stdexcept>
#include <string>

// Scaled modified Bessel functions, the Gaussian mass function and an
// adaptive Gauss-Kronrod integrator. These are the primitives every
// closed-form density and transform in the library is assembled from.
//
// All Bessel evaluations are exponentially scaled, e^{-z} I_n(z): the
// formulas downstream always pair e^{-lambda t} with I_n(lambda * sqrt(...))
// and the product lambda*T reaches 10^4 in the reference experiments, where
// the raw I_n overflow.

namespace telegraph {

/// e^{-z} I0(z) for z >= 0. Relative error <= 1e-12; value in (0, 1].
double bessel_i0_scaled(double z);

/// e^{-z} I1(z) for z >= 0. Value in [0, bessel_i0_scaled(z)).
double bessel_i1_scaled(double z);

/// e^{-z} I1(z) / z, finite at z = 0 (limit 1/2). Removable-singularity
/// form needed by the hitting densities and the wave kernel.
double bessel_i1_scaled_over_z(double z);

/// (2/sqrt(2*pi)) * Integral_0^a e^{-y^2/2} dy = P(|Z| <= a) for Z ~ N(0,1).
double gauss_tail(double a);

// ---------------------------------------------------------------------------
// Adaptive quadrature
// ---------------------------------------------------------------------------

struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
};

/// Which endpoints carry an integrable inverse-square-root singularity.
/// Flagged ends are removed exactly by the substitution u = a + v^2
/// (resp. b - v^2) before the adaptive rule sees the integrand.
struct SingularEnds {
  bool left = false;
  bool right = false;
};

/// Thrown when the subdivision budget is exhausted before the requested
/// tolerance is met. Carries the best estimate and its error bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Adaptive 15-point Gauss-Kronrod integral of f over [a, b].
/// Stops when the summed error estimate <= max(abs_tol, rel_tol*|result|).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadSpec& spec = {}, SingularEnds ends = {});

/// Fixed 16-point Gauss-Legendre rule on [a, b] (no error estimate).
/// Used by the path sampler for per-segment probe integrals.
double gauss_legendre_16(const std::function<double(double)>& f, double a, double b);

}  // namespace telegraph
