// SPDX-License-Identifier: MIT
#include "telegraph/laplace_oracles.hpp"

#include <cmath>

#include "telegraph/limit_laws.hpp"

namespace telegraph {

double kappa(double s, double lambda_T) {
  if (!(s > 0.0) || !(lambda_T > 0.0)) {
    throw std::domain_error("kappa: s and lambda_T must be > 0");
  }
  return std::sqrt(s * (s + 2.0 * lambda_T));
}

namespace {

void require_tilde_positive(const TransformPoint& tp) {
  if (!(tp.s_tilde > 0.0)) {
    throw std::domain_error("transform point needs s + beta > 0");
  }
}

// truncation horizon: integrands are bounded by e^{-st}, so the tail beyond
// t_max is below abs_tol
double transform_horizon(double s, double abs_tol) {
  return -std::log(abs_tol * s) / s;
}

}  // namespace

double w_origin(const TransformPoint& tp, double lambda_T, Velocity v0) {
  require_tilde_positive(tp);
  const double k = kappa(tp.s, lambda_T);
  const double kt = kappa(tp.s_tilde, lambda_T);
  const double cross = 2.0 * lambda_T / ((k + tp.s) * (kt + tp.s_tilde));
  switch (v0) {
    case Velocity::Plus: return 2.0 / (kt + tp.s_tilde) + cross;
    case Velocity::Minus: return 2.0 / (k + tp.s) + cross;
    default:
      throw std::domain_error("w_origin: v0 must be Plus or Minus");
  }
}

double w_offset(double xi, const TransformPoint& tp, double lambda_T, Velocity v0) {
  require_tilde_positive(tp);
  if (v0 == Velocity::Symmetric) {
    throw std::domain_error("w_offset: v0 must be Plus or Minus");
  }
  if (xi == 0.0) return w_origin(tp, lambda_T, v0);

  const double k = kappa(tp.s, lambda_T);
  const double kt = kappa(tp.s_tilde, lambda_T);
  const double denom = tp.s * kt + tp.s_tilde * k;
  const bool plus = v0 == Velocity::Plus;
  if (xi < 0.0) {
    const double comp = plus ? k + tp.s : k - tp.s;
    return 1.0 / tp.s - std::exp(k * xi) * tp.beta / tp.s * comp / denom;
  }
  const double comp = plus ? kt - tp.s_tilde : kt + tp.s_tilde;
  return 1.0 / tp.s_tilde +
         std::exp(-kt * xi) * tp.beta / tp.s_tilde * comp / denom;
}

double hitting_laplace(const TransformPoint& tp, double lambda_T, double xi) {
  if (!(xi < 0.0)) throw std::domain_error("hitting_laplace: requires xi < 0");
  const double k = kappa(tp.s, lambda_T);
  return std::exp(xi * k) - std::exp((tp.s + lambda_T) * xi);
}

double hitting_laplace_minus(const TransformPoint& tp, double lambda_T, double xi) {
  if (!(xi < 0.0)) throw std::domain_error("hitting_laplace_minus: requires xi < 0");
  const double k = kappa(tp.s, lambda_T);
  return lambda_T * std::exp(xi * k) / (lambda_T + tp.s + k);
}

PhiTransformCheck phi_transform_check(double s, double beta, double lambda_T,
                                      const QuadSpec& spec) {
  const TransformPoint tp(s, beta);
  require_tilde_positive(tp);
  const double k = kappa(s, lambda_T);
  const double kt = kappa(tp.s_tilde, lambda_T);

  const double t_max = transform_horizon(s, spec.abs_tol);
  const double lhs_A = integrate(
      [s, lambda_T](double t) { return std::exp(-s * t) * phi(lambda_T, t); }, 0.0,
      t_max, spec);

  auto convolution = [beta, lambda_T, &spec](double t) {
    if (t == 0.0) return 0.0;
    return integrate(
        [beta, lambda_T, t](double y) {
          return std::exp(-beta * y) * phi(lambda_T, y) * phi(lambda_T, t - y);
        },
        0.0, t, spec);
  };
  const double lhs_B = integrate(
      [s, &convolution](double t) { return std::exp(-s * t) * convolution(t); }, 0.0,
      t_max, spec);

  return {lhs_A, 1.0 / (k + s), lhs_B, 1.0 / ((k + s) * (kt + tp.s_tilde))};
}

double y_transform_closed(double a, const TransformPoint& tp, YBranch which) {
  if (!(a >= 0.0)) throw std::domain_error("y_transform_closed: a must be >= 0");
  require_tilde_positive(tp);
  const double root = 1.0 / std::sqrt(tp.s * tp.s_tilde);
  if (which == YBranch::Eta) {
    return std::exp(-a * std::sqrt(2.0 * tp.s)) * (root - 1.0 / tp.s) + 1.0 / tp.s;
  }
  return std::exp(-a * std::sqrt(2.0 * tp.s_tilde)) * (root - 1.0 / tp.s_tilde) +
         1.0 / tp.s_tilde;
}

double y_transform_numeric(double a, const TransformPoint& tp, const QuadSpec& spec) {
  if (!(a >= 0.0)) throw std::domain_error("y_transform_numeric: a must be >= 0");
  require_tilde_positive(tp);
  const double s = tp.s, beta = tp.beta;

  // E[e^{-beta Y_a(t)}] with Y_a(t) = t Y_{a/sqrt(t)}: Gaussian atom at 0
  // plus the tilted y-family density on (0,1), rescaled by the horizon.
  auto tilted = [a, beta, &spec](double t) {
    const double at = a / std::sqrt(t);
    double e = (a > 0.0) ? gauss_tail(at) : 0.0;
    auto f = [a, at, beta, t, &spec](double z) {
      const double dens = (a > 0.0) ? y_density(at, z, spec) : arcsine_pdf(z);
      return std::exp(-beta * t * z) * dens;
    };
    return e + integrate(f, 0.0, 1.0, spec, {true, true});
  };

  const double t_max = transform_horizon(s, spec.abs_tol);
  return integrate(
      [s, &tilted](double t) { return std::exp(-s * t) * tilted(t); },
      0.0, t_max, spec, {true, false});
}

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

namespace {

void record(std::vector<CheckResult>& out, const std::string& name,
            nlohmann::json params, double lhs, double rhs, double tol) {
  const double err = std::abs(lhs - rhs);
  out.push_back({name, std::move(params), lhs, rhs, err, tol, err <= tol});
}

// numeric transform of the origin-start tilted expectation across horizons,
// rebuilt at every t through the scaling phi_{Tt}(y/t) = phi_T(y)
double origin_roundtrip_numeric(double s, double beta, double lambda_T, Velocity v0,
                                const QuadSpec& spec) {
  auto tilted = [beta, lambda_T, v0, &spec](double t) {
    if (t == 0.0) return 1.0;
    const double lt = lambda_T * t;
    const double atom = 2.0 * phi(lt, 1.0);
    double e = (v0 == Velocity::Plus) ? atom * std::exp(-beta * t) : atom;
    e += integrate(
        [beta, lt, t](double y) { return std::exp(-beta * t * y) * psi(lt, y); },
        0.0, 1.0, spec);
    return e;
  };
  const double t_max = transform_horizon(s, spec.abs_tol);
  return integrate([s, &tilted](double t) { return std::exp(-s * t) * tilted(t); },
                   0.0, t_max, spec);
}

void suite_beta0(std::vector<CheckResult>& out, const QuadSpec&) {
  for (double s : {0.3, 1.0, 1.7}) {
    for (double lt : {0.5, 2.0, 12.0}) {
      const TransformPoint tp(s, 0.0);
      for (Velocity v : {Velocity::Plus, Velocity::Minus}) {
        record(out, "beta0_collapse_w0",
               {{"s", s}, {"lambda_T", lt}, {"v0", to_string(v)}},
               w_origin(tp, lt, v), 1.0 / s, 1e-12);
        for (double xi : {-0.7, 1.3}) {
          record(out, "beta0_collapse_w_offset",
                 {{"s", s}, {"lambda_T", lt}, {"xi", xi}, {"v0", to_string(v)}},
                 w_offset(xi, tp, lt, v), 1.0 / s, 1e-12);
        }
      }
    }
  }
}

void suite_w0(std::vector<CheckResult>& out, const QuadSpec&) {
  // duality at the origin: w+(s, beta) = w-(s~, -beta)
  const double s = 1.0, beta = 0.5, lt = 3.0;
  const TransformPoint tp(s, beta);
  const TransformPoint dual(s + beta, -beta);
  record(out, "w0_plus_minus_duality", {{"s", s}, {"beta", beta}, {"lambda_T", lt}},
         w_origin(tp, lt, Velocity::Plus), w_origin(dual, lt, Velocity::Minus),
         1e-12);

  // kappa identity
  record(out, "kappa_identity", {{"s", 3.0}, {"lambda_T", 7.0}},
         kappa(3.0, 7.0) * kappa(3.0, 7.0) - 9.0, 2.0 * 7.0 * 3.0, 1e-12);

  // continuity of the offset transform at xi = 0
  for (Velocity v : {Velocity::Plus, Velocity::Minus}) {
    const double left = w_offset(-1e-12, tp, lt, v);
    const double right = w_offset(1e-12, tp, lt, v);
    record(out, "w_offset_continuity",
           {{"s", s}, {"beta", beta}, {"lambda_T", lt}, {"v0", to_string(v)}}, left,
           right, 1e-9);
    record(out, "w_offset_at_zero",
           {{"s", s}, {"beta", beta}, {"lambda_T", lt}, {"v0", to_string(v)}},
           w_offset(0.0, tp, lt, v), w_origin(tp, lt, v), 0.0);
  }

  // boundary behavior at xi -> -inf / +inf
  record(out, "w_offset_limit_left", {{"s", s}, {"beta", beta}, {"lambda_T", lt}},
         w_offset(-50.0 / kappa(s, lt) * std::log(10.0), tp, lt, Velocity::Plus),
         1.0 / s, 1e-8);
  record(out, "w_offset_limit_right", {{"s", s}, {"beta", beta}, {"lambda_T", lt}},
         w_offset(50.0 / kappa(s + beta, lt) * std::log(10.0), tp, lt, Velocity::Plus),
         1.0 / (s + beta), 1e-8);
}

void suite_origin_roundtrip(std::vector<CheckResult>& out, const QuadSpec& spec) {
  for (double lt : {1.0, 2.0}) {
    for (double beta : {0.5, 1.0}) {
      for (double s : {0.7, 1.0}) {
        const TransformPoint tp(s, beta);
        for (Velocity v : {Velocity::Plus, Velocity::Minus}) {
          record(out, "origin_law_roundtrip",
                 {{"s", s}, {"beta", beta}, {"lambda_T", lt}, {"v0", to_string(v)}},
                 origin_roundtrip_numeric(s, beta, lt, v, spec),
                 w_origin(tp, lt, v), 1e-5);
        }
      }
    }
  }
}

void suite_offset_roundtrip(std::vector<CheckResult>& out, const QuadSpec& spec) {
  // one offset point: xi = -0.25, lambda T = 2, (s, beta) = (1, 1)
  const double xi = -0.25, s = 1.0, beta = 1.0;
  const double lambda = 2.0, c = 1.0, T = 1.0;  // lambda T = 2, x = c T xi
  const double x = c * T * xi;
  const TransformPoint tp(s, beta);

  for (Velocity v : {Velocity::Plus, Velocity::Minus}) {
    auto tilted = [&](double t) {
      if (t <= -xi) return 1.0;
      TelegraphParams p{lambda, c, T * t, v};
      return offset_tilted_expectation(p, x, beta * t, spec);
    };
    const double t_max = transform_horizon(s, 1e-9);
    const double numeric =
        integrate([&](double t) { return std::exp(-s * t) * tilted(t); }, 0.0, t_max,
                  {1e-8, 1e-7, 200});
    record(out, "offset_law_roundtrip",
           {{"s", s}, {"beta", beta}, {"lambda_T", lambda * T}, {"xi", xi},
            {"v0", to_string(v)}},
           numeric, w_offset(xi, tp, lambda * T, v), 1e-4);
  }
}

void suite_hitting(std::vector<CheckResult>& out, const QuadSpec& spec) {
  // plain substitution anchor: xi=-2, s=1, lambda T=1
  record(out, "hitting_laplace_value", {{"s", 1.0}, {"lambda_T", 1.0}, {"xi", -2.0}},
         hitting_laplace(TransformPoint(1.0, 0.0), 1.0, -2.0),
         std::exp(-2.0 * std::sqrt(3.0)) - std::exp(-4.0), 1e-15);

  // s -> 0+ recovers the total density mass 1 - e^{lambda T xi}; the approach
  // is O(sqrt(s)) through kappa
  record(out, "hitting_laplace_s_to_0",
         {{"s", 1e-13}, {"lambda_T", 1.0}, {"xi", -1.0}},
         hitting_laplace(TransformPoint(1e-13, 0.0), 1.0, -1.0),
         1.0 - std::exp(-1.0), 1e-6);

  // numeric transform of Q+/Q- against the closed forms (T = 1 scaling)
  for (auto [lt, t0] : std::vector<std::pair<double, double>>{
           {1.0, 1.0}, {2.0, 0.5}, {0.5, 2.0}}) {
    const double s = 1.0;
    TelegraphParams p{lt, 1.0, 10.0, Velocity::Plus};
    HittingLaw hp = hitting_law(p, -t0);
    const double numeric_p = integrate(
        [&hp, s](double u) { return std::exp(-s * u) * hp.density(u); }, hp.t0,
        hp.t0 + 60.0, spec);
    record(out, "hitting_laplace_plus_numeric",
           {{"s", s}, {"lambda_T", lt}, {"T0", t0}}, numeric_p,
           hitting_laplace(TransformPoint(s, 0.0), lt, -t0), 1e-6);

    p.v0 = Velocity::Minus;
    HittingLaw hm = hitting_law(p, -t0);
    const double numeric_m = integrate(
        [&hm, s](double u) { return std::exp(-s * u) * hm.density(u); }, hm.t0,
        hm.t0 + 60.0, spec, {hm.left_flagged, false});
    record(out, "hitting_laplace_minus_numeric",
           {{"s", s}, {"lambda_T", lt}, {"T0", t0}}, numeric_m,
           hitting_laplace_minus(TransformPoint(s, 0.0), lt, -t0), 1e-6);
  }
}

void suite_phi_transform(std::vector<CheckResult>& out, const QuadSpec& spec) {
  {  // anchor: (s, lambda T) = (1, 1) gives 1/(sqrt(3)+1)
    PhiTransformCheck r = phi_transform_check(1.0, 0.0, 1.0, spec);
    record(out, "phi_transform_anchor", {{"s", 1.0}, {"lambda_T", 1.0}}, r.lhs_A,
           1.0 / (std::sqrt(3.0) + 1.0), 1e-6);
  }
  {  // anchor: rhs_B at (1,1,1) = 1/((sqrt3+1)(sqrt8+2))
    PhiTransformCheck r = phi_transform_check(1.0, 1.0, 1.0, spec);
    record(out, "phi_convolution_anchor", {{"s", 1.0}, {"beta", 1.0}, {"lambda_T", 1.0}},
           r.rhs_B, 1.0 / ((std::sqrt(3.0) + 1.0) * (std::sqrt(8.0) + 2.0)), 1e-12);
  }
  for (double s : {0.5, 1.0, 2.0}) {
    for (double beta : {0.0, 1.0}) {
      for (double lt : {1.0, 5.0}) {
        PhiTransformCheck r = phi_transform_check(s, beta, lt, spec);
        record(out, "phi_transform", {{"s", s}, {"beta", beta}, {"lambda_T", lt}},
               r.lhs_A, r.rhs_A, 1e-5);
        record(out, "phi_convolution_transform", {{"s", s}, {"beta", beta}, {"lambda_T", lt}},
               r.lhs_B, r.rhs_B, 1e-5);
        if (beta == 0.0) {
          record(out, "phi_convolution_beta0_square",
                 {{"s", s}, {"lambda_T", lt}}, r.rhs_B, r.rhs_A * r.rhs_A, 1e-12);
        }
      }
    }
  }
}

void suite_y_transform(std::vector<CheckResult>& out, const QuadSpec& spec) {
  record(out, "y_transform_a0_beta0", {{"a", 0.0}, {"s", 1.0}, {"beta", 0.0}},
         y_transform_numeric(0.0, TransformPoint(1.0, 0.0), spec), 1.0, 1e-8);
  record(out, "y_transform_a0_anchor", {{"a", 0.0}, {"s", 1.0}, {"beta", 1.0}},
         y_transform_numeric(0.0, TransformPoint(1.0, 1.0), spec),
         1.0 / std::sqrt(2.0), 1e-5);

  for (double a : {0.5, 1.0}) {
    for (double beta : {0.5, 2.0}) {
      for (double s : {0.5, 1.0, 3.0}) {
        const TransformPoint tp(s, beta);
        record(out, "y_transform_eta", {{"a", a}, {"s", s}, {"beta", beta}},
               y_transform_numeric(a, tp, spec), y_transform_closed(a, tp, YBranch::Eta),
               1e-5);
      }
    }
  }

  // complement branch: closed-form swap identity only
  const TransformPoint tp(1.0, 2.0);
  const TransformPoint swapped(3.0, -2.0);
  record(out, "y_transform_complement_swap", {{"a", 1.0}, {"s", 1.0}, {"beta", 2.0}},
         y_transform_closed(1.0, tp, YBranch::Complement),
         y_transform_closed(1.0, swapped, YBranch::Eta), 1e-15);
}

}  // namespace

nlohmann::json to_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& r : results) {
    arr.push_back({{"check", r.check},
                   {"params", r.params},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_err", r.abs_err},
                   {"tol", r.tol},
                   {"pass", r.pass}});
  }
  return arr;
}

std::vector<CheckResult> run_verification(const std::string& suite,
                                          const QuadSpec& spec) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "beta0") suite_beta0(out, spec);
  if (all || suite == "w0") suite_w0(out, spec);
  if (all || suite == "phi-transform") suite_phi_transform(out, spec);
  if (all || suite == "y-transform") suite_y_transform(out, spec);
  if (all || suite == "hitting") suite_hitting(out, spec);
  if (all || suite == "origin-roundtrip") suite_origin_roundtrip(out, spec);
  if (all || suite == "offset-roundtrip") suite_offset_roundtrip(out, spec);
  if (out.empty()) throw std::invalid_argument("unknown verification suite: " + suite);
  return out;
}

}  // namespace telegraph
