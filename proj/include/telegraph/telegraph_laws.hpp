// SPDX-License-Identifier: MIT
#pragma once

#include <functional>

#include "telegraph/mixed_law.hpp"
#include "telegraph/special_fn.hpp"

// Exact finite-horizon occupation-time laws of the telegraph process: the
// origin-start law (atom + psi density), the offset-start law assembled from
// the first-passage decomposition, the first-passage law itself, and the
// expectation solver for the damped wave equation.

namespace telegraph {

enum class Velocity { Plus, Minus, Symmetric };

const char* to_string(Velocity v);
Velocity velocity_from_string(const std::string& s);

struct TelegraphParams {
  double lambda;  // reversal rate, 1/time
  double c;       // speed
  double T;       // horizon
  Velocity v0 = Velocity::Symmetric;

  void validate() const;
};

/// phi(lambda*T, t) = (1/2) e^{-lambda T t} (I0(lambda T t) + I1(lambda T t)).
/// Decreasing in t from phi(.,0) = 1/2; only the product lambda*T enters,
/// which is the scaling relation phi_{aT}(t) = phi_T(a t).
double phi(double lambda_T, double t);

/// Direct quadrature of the defining integral
///   (4 pi lambda T)^{-1} Int_0^t (1-e^{-2 lambda T u}) u^{-3/2} (t-u)^{-1/2} du.
/// Exists purely as an independent cross-check of the Bessel closed form.
double phi_integral_oracle(double lambda_T, double t, const QuadSpec& spec = {});

/// psi(lambda*T, y) = 2 lambda T phi(y) phi(1-y): the continuous density of
/// the origin-start law. Symmetric about y = 1/2.
double psi(double lambda_T, double y);

/// Occupation-fraction law for a start at the origin: atom 2 phi(lambda T, 1)
/// at 1 (Plus), at 0 (Minus), or split evenly between both (Symmetric), plus
/// the psi density.
MixedLaw origin_law(const TelegraphParams& p, int grid_size = 512,
                    const QuadSpec& spec = {});

/// First-passage law of the level -x > 0: ballistic atom e^{-lambda T0} at
/// T0 = |x|/c for a Plus start, none for Minus, plus the density Q+/Q-.
struct HittingLaw {
  double t0 = 0.0;
  double atom_at_t0 = 0.0;
  std::function<double(double)> density;  // defined on [t0, infinity)
  bool left_flagged = false;  // Minus case: flag t0 in quadratures

  /// Integral of the density over [t0, U].
  double mass_up_to(double U, const QuadSpec& spec = {}) const;
  /// atom + full density mass; the power-law tail beyond U is integrated
  /// exactly under the substitution u = U / t^2.
  double total_mass(double U, const QuadSpec& spec = {}) const;
};

HittingLaw hitting_law(const TelegraphParams& p, double x);

/// Occupation-fraction law for a start at x != 0. For x < 0 the law is the
/// first-passage mixture over restarts at the origin: an atom at 0 (never
/// reached the positive side), the ballistic atom at 1 - T0/T (Plus only)
/// and a continuous part supported on [0, 1 - T0/T]. For x > 0 the law is
/// the reflected law of (-x, opposite sign). T <= T0 degenerates to a unit
/// atom at 0.
MixedLaw offset_law(const TelegraphParams& p, double x, int grid_size = 512,
                    const QuadSpec& spec = {});

/// E[g0(x + X_t)] for the unconditional (Symmetric) process: the explicit
/// solution of the damped wave equation with the scaled Bessel kernel.
double telegraph_expectation(const TelegraphParams& p,
                             const std::function<double(double)>& g0, double x,
                             double t, const QuadSpec& spec = {});

/// E[e^{-theta eta_T(x)}] for x < 0 straight from the first-passage
/// decomposition, no grid built. Feeds the Laplace-domain round-trip checks.
double offset_tilted_expectation(const TelegraphParams& p, double x, double theta,
                                 const QuadSpec& spec = {});

}  // namespace telegraph
