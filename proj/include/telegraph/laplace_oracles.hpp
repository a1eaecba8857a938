// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "telegraph/special_fn.hpp"
#include "telegraph/telegraph_laws.hpp"

// Closed-form transforms of the occupation laws and their numerical-transform
// comparators. Every density produced by telegraph_laws and limit_laws has an
// independent Laplace-domain identity here; the check suite turns each pair
// into a machine-readable pass/fail record.

namespace telegraph {

struct TransformPoint {
  double s;        // transform variable, > 0
  double beta;     // exponential tilt
  double s_tilde;  // s + beta

  TransformPoint(double s_, double beta_) : s(s_), beta(beta_), s_tilde(s_ + beta_) {
    if (!(s > 0.0)) throw std::domain_error("TransformPoint: s must be > 0");
  }
};

/// kappa(s) = sqrt(s (s + 2 lambda T)); kappa^2 - s^2 = 2 lambda T s.
double kappa(double s, double lambda_T);

/// Double Laplace transform of the origin-start occupation law at xi = 0:
///   w+ = 2/(k~ + s~) + 2 lambda T / ((k + s)(k~ + s~)),
///   w- = 2/(k  + s ) + 2 lambda T / ((k + s)(k~ + s~)).
double w_origin(const TransformPoint& tp, double lambda_T, Velocity v0);

/// Transform of the offset-start law; both xi-branches join w_origin at 0:
///   xi <= 0:  1/s  - e^{kappa xi} (beta/s) (kappa +- s) / (s k~ + s~ k)
///   xi >= 0:  1/s~ + e^{-k~ xi} (beta/s~) (k~ -+ s~) / (s k~ + s~ k)
double w_offset(double xi, const TransformPoint& tp, double lambda_T, Velocity v0);

/// Plus-start first-passage transform (xi < 0, beta = 0):
///   T Int e^{-st} Q+(Tt) dt = e^{xi kappa} - e^{(s + lambda T) xi}.
double hitting_laplace(const TransformPoint& tp, double lambda_T, double xi);

/// Minus-start companion, via the strong Markov step at the first reversal
/// (an Exp(lambda T) wait, then a Plus passage from the displaced start):
///   T Int e^{-st} Q-(Tt) dt = lambda T e^{xi kappa} / (lambda T + s + kappa).
double hitting_laplace_minus(const TransformPoint& tp, double lambda_T, double xi);

struct PhiTransformCheck {
  double lhs_A, rhs_A;  // Int e^{-st} phi dt   vs 1/(kappa + s)
  double lhs_B, rhs_B;  // transform of the tilted phi*phi convolution
};
PhiTransformCheck phi_transform_check(double s, double beta, double lambda_T,
                                      const QuadSpec& spec = {});

enum class YBranch { Eta, Complement };

/// Closed form of the double transform of Y_a(t) = t Y_{a/sqrt(t)}:
///   Eta:        e^{-a sqrt(2s)} (1/sqrt(s s~) - 1/s ) + 1/s
///   Complement: same with s and s~ interchanged.
double y_transform_closed(double a, const TransformPoint& tp,
                          YBranch which = YBranch::Eta);

/// Numeric double transform Int_0^inf e^{-st} E[e^{-beta Y_a(t)}] dt computed
/// by quadrature from the y-family density scaled to horizon t.
double y_transform_numeric(double a, const TransformPoint& tp,
                           const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string check;
  nlohmann::json params;
  double lhs;
  double rhs;
  double abs_err;
  double tol;
  bool pass;
};

nlohmann::json to_json(const std::vector<CheckResult>& results);

/// Run one named suite ("beta0", "w0", "phi-transform", "y-transform",
/// "hitting", "origin-roundtrip", "offset-roundtrip") or "all". Each record
/// compares a numeric transform against its closed form on the declared
/// parameter grid.
std::vector<CheckResult> run_verification(const std::string& suite,
                                          const QuadSpec& spec = {});

}  // namespace telegraph
