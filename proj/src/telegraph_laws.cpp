// SPDX-License-Identifier: MIT
#include "telegraph/telegraph_laws.hpp"

#include <cmath>
#include <stdexcept>

namespace telegraph {

const char* to_string(Velocity v) {
  switch (v) {
    case Velocity::Plus: return "plus";
    case Velocity::Minus: return "minus";
    case Velocity::Symmetric: return "symmetric";
  }
  return "?";
}

Velocity velocity_from_string(const std::string& s) {
  if (s == "plus" || s == "+") return Velocity::Plus;
  if (s == "minus" || s == "-") return Velocity::Minus;
  if (s == "symmetric" || s == "sym") return Velocity::Symmetric;
  throw std::invalid_argument("unknown velocity mode: " + s);
}

void TelegraphParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda) || !(c > 0.0) || !std::isfinite(c) ||
      !(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("TelegraphParams: lambda, c, T must be positive finite");
  }
}

double phi(double lambda_T, double t) {
  if (!(lambda_T >= 0.0) || !(t >= 0.0) || !std::isfinite(lambda_T) || !std::isfinite(t)) {
    throw std::domain_error("phi: lambda_T and t must be finite and >= 0");
  }
  const double z = lambda_T * t;
  return 0.5 * (bessel_i0_scaled(z) + bessel_i1_scaled(z));
}

double phi_integral_oracle(double lambda_T, double t, const QuadSpec& spec) {
  if (!(lambda_T > 0.0) || !(t > 0.0)) {
    throw std::domain_error("phi_integral_oracle: lambda_T and t must be > 0");
  }
  auto f = [lambda_T, t](double u) {
    return -std::expm1(-2.0 * lambda_T * u) / (u * std::sqrt(u) * std::sqrt(t - u));
  };
  return integrate(f, 0.0, t, spec, {true, true}) / (4.0 * M_PI * lambda_T);
}

double psi(double lambda_T, double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("psi: y outside [0,1]");
  return 2.0 * lambda_T * phi(lambda_T, y) * phi(lambda_T, 1.0 - y);
}

MixedLaw origin_law(const TelegraphParams& p, int grid_size, const QuadSpec& spec) {
  p.validate();
  const double lt = p.lambda * p.T;
  const double edge_atom = 2.0 * phi(lt, 1.0);

  std::vector<Atom> atoms;
  switch (p.v0) {
    case Velocity::Plus: atoms = {{1.0, edge_atom}}; break;
    case Velocity::Minus: atoms = {{0.0, edge_atom}}; break;
    case Velocity::Symmetric:
      atoms = {{0.0, 0.5 * edge_atom}, {1.0, 0.5 * edge_atom}};
      break;
  }

  nlohmann::json params = {{"law", "origin"},       {"lambda", p.lambda},
                           {"c", p.c},              {"T", p.T},
                           {"v0", to_string(p.v0)}, {"x", 0.0}};
  return MixedLaw::from_density(
      std::move(atoms), [lt](double y) { return psi(lt, y); }, 0.0, 1.0, grid_size,
      {false, false}, spec, std::move(params));
}

// ---------------------------------------------------------------------------
// First passage
// ---------------------------------------------------------------------------

namespace {

// Q+ and Q- evaluated through scaled Bessels. With w = sqrt(u^2 - t0^2) the
// exponent splits as u - w = t0^2/(u + w), which stays accurate for u >> t0
// where e^{-lambda u} I(lambda w) would round to 0 * inf.
//
// The Minus density is the inverse transform of
//   lambda e^{-T0 kappa} / (lambda + s + kappa),
// i.e. an Exp(lambda) wait for the first reversal followed by a Plus passage
// from the displaced start:
//   Q-(u) = e^{-lambda u} [lambda T0 I0(lambda w)
//                          + ((u-T0)/w) I1(lambda w)] / (u + T0).
// Its transform, boundary value Q-(T0) = lambda e^{-lambda T0}/2 and pointwise
// values are confirmed by path simulation.
struct HittingDensity {
  double lambda;
  double t0;
  bool plus;

  double operator()(double u) const {
    if (u < t0) return 0.0;
    const double w = std::sqrt((u - t0) * (u + t0));
    const double decay = std::exp(-lambda * (t0 * t0) / (u + w));
    const double z = lambda * w;
    if (plus) {
      return lambda * lambda * t0 * decay * bessel_i1_scaled_over_z(z);
    }
    return decay *
           (lambda * t0 * bessel_i0_scaled(z) +
            lambda * (u - t0) * bessel_i1_scaled_over_z(z)) /
           (u + t0);
  }
};

}  // namespace

HittingLaw hitting_law(const TelegraphParams& p, double x) {
  p.validate();
  if (!(x < 0.0)) throw std::domain_error("hitting_law: requires x < 0");
  if (p.v0 == Velocity::Symmetric) {
    throw std::domain_error("hitting_law: v0 must be Plus or Minus");
  }
  HittingLaw law;
  law.t0 = -x / p.c;
  const bool plus = p.v0 == Velocity::Plus;
  law.atom_at_t0 = plus ? std::exp(-p.lambda * law.t0) : 0.0;
  law.density = HittingDensity{p.lambda, law.t0, plus};
  law.left_flagged = !plus;
  return law;
}

double HittingLaw::mass_up_to(double U, const QuadSpec& spec) const {
  if (U <= t0) return 0.0;
  return integrate(density, t0, U, spec, {left_flagged, false});
}

double HittingLaw::total_mass(double U, const QuadSpec& spec) const {
  const double finite = mass_up_to(U, spec);
  // tail: u = U / t^2 maps (U, inf) onto (0, 1); the u^{-3/2} decay of the
  // density makes the transformed integrand bounded
  auto d = density;
  auto tail_integrand = [d, U](double t) { return 2.0 * U * d(U / (t * t)) / (t * t * t); };
  const double tail = integrate(tail_integrand, 1e-12, 1.0, spec);
  return atom_at_t0 + finite + tail;
}

// ---------------------------------------------------------------------------
// Offset law (first-passage decomposition)
// ---------------------------------------------------------------------------

namespace {

Velocity flipped(Velocity v) {
  switch (v) {
    case Velocity::Plus: return Velocity::Minus;
    case Velocity::Minus: return Velocity::Plus;
    default: return Velocity::Symmetric;
  }
}

nlohmann::json offset_params_json(const TelegraphParams& p, double x) {
  return {{"law", "offset"},        {"lambda", p.lambda}, {"c", p.c}, {"T", p.T},
          {"v0", to_string(p.v0)},  {"x", x}};
}

// Atoms plus density callable of one conditional branch (Plus or Minus) for
// x < 0, T > T0.
struct OffsetComponents {
  double atom_zero;
  double y_top;
  double mu_atom_mass;  // at y_top; zero for Minus
  std::function<double(double)> density;
};

OffsetComponents make_offset_components(const TelegraphParams& p, double x,
                                        const QuadSpec& spec) {
  const double lambda = p.lambda, T = p.T;
  const double t0 = -x / p.c;
  const double y_top = 1.0 - t0 / T;
  const bool plus = p.v0 == Velocity::Plus;

  const HittingLaw hit = hitting_law(p, x);
  const double mass_reached = hit.mass_up_to(T, spec);
  double atom_zero = 1.0 - hit.atom_at_t0 - mass_reached;
  if (atom_zero < -1e-8) {
    throw std::logic_error("offset_law: negative atom mass at zero");
  }
  atom_zero = std::max(atom_zero, 0.0);

  // Density on [0, y_top]. The rescaled psi cancels the 1/(1 - u/T) factor:
  //   psi_{T-u}(y / (1-u/T)) / (1-u/T) = 2 lambda T phi_s(z) phi_s(1-z),
  // with s = lambda (T-u) and z = y T / (T-u).
  auto q = hit.density;
  const double atom_t0 = hit.atom_at_t0;
  const bool left_flag = hit.left_flagged;
  auto density = [lambda, T, t0, y_top, plus, q, atom_t0, left_flag,
                  spec](double y) {
    const double u_max = (1.0 - y) * T;
    double val = 2.0 * T * q(u_max) * phi(lambda * T, y);
    if (plus) {
      const double s = lambda * (T - t0);
      const double z = std::min(y / y_top, 1.0);
      val += atom_t0 * 2.0 * lambda * T * phi(s, z) * phi(s, 1.0 - z);
    }
    if (u_max > t0) {
      auto inner = [lambda, T, y](double u) {
        const double s = lambda * (T - u);
        const double z = (y == 0.0) ? 0.0 : std::min(y * T / (T - u), 1.0);
        return 2.0 * lambda * T * phi(s, z) * phi(s, 1.0 - z);
      };
      val += integrate([q, inner](double u) { return q(u) * inner(u); }, t0, u_max,
                       spec, {left_flag, false});
    }
    return val;
  };

  const double mu_mass =
      plus ? 2.0 * hit.atom_at_t0 * phi(lambda * (T - t0), 1.0) : 0.0;
  return {atom_zero, y_top, mu_mass, std::move(density)};
}

MixedLaw offset_law_negative(const TelegraphParams& p, double x, int grid_size,
                             const QuadSpec& spec) {
  OffsetComponents parts = make_offset_components(p, x, spec);
  std::vector<Atom> atoms{{0.0, parts.atom_zero}};
  if (p.v0 == Velocity::Plus) atoms.push_back({parts.y_top, parts.mu_atom_mass});
  return MixedLaw::from_density(std::move(atoms), std::move(parts.density), 0.0,
                                parts.y_top, grid_size, {false, false}, spec,
                                offset_params_json(p, x));
}

}  // namespace

double offset_tilted_expectation(const TelegraphParams& p, double x, double theta,
                                 const QuadSpec& spec) {
  p.validate();
  if (!(x < 0.0)) throw std::domain_error("offset_tilted_expectation: requires x < 0");
  if (p.v0 == Velocity::Symmetric) {
    TelegraphParams half = p;
    half.v0 = Velocity::Plus;
    const double ep = offset_tilted_expectation(half, x, theta, spec);
    half.v0 = Velocity::Minus;
    return 0.5 * ep + 0.5 * offset_tilted_expectation(half, x, theta, spec);
  }
  const double t0 = -x / p.c;
  if (p.T <= t0) return 1.0;

  OffsetComponents parts = make_offset_components(p, x, spec);
  double e = parts.atom_zero + parts.mu_atom_mass * std::exp(-theta * parts.y_top);
  auto dens = parts.density;
  e += integrate([dens, theta](double y) { return std::exp(-theta * y) * dens(y); },
                 0.0, parts.y_top, spec);
  return e;
}

MixedLaw offset_law(const TelegraphParams& p, double x, int grid_size,
                    const QuadSpec& spec) {
  p.validate();
  if (x == 0.0 || !std::isfinite(x)) {
    throw std::domain_error("offset_law: x must be nonzero finite (use origin_law)");
  }

  if (x > 0.0) {
    TelegraphParams mirror = p;
    mirror.v0 = flipped(p.v0);
    MixedLaw law = offset_law(mirror, -x, grid_size, spec).reflected();
    law.set_params(offset_params_json(p, x));
    return law;
  }

  const double t0 = -x / p.c;
  if (p.T <= t0) {
    // the path cannot reach the origin inside the horizon
    return MixedLaw::atoms_only({{0.0, 1.0}}, grid_size, offset_params_json(p, x));
  }

  if (p.v0 == Velocity::Symmetric) {
    TelegraphParams half = p;
    half.v0 = Velocity::Plus;
    MixedLaw lp = offset_law_negative(half, x, grid_size, spec);
    half.v0 = Velocity::Minus;
    MixedLaw lm = offset_law_negative(half, x, grid_size, spec);
    MixedLaw law = MixedLaw::mixture(lp, 0.5, lm, 0.5);
    law.set_params(offset_params_json(p, x));
    return law;
  }
  return offset_law_negative(p, x, grid_size, spec);
}

// ---------------------------------------------------------------------------
// Damped-wave expectation
// ---------------------------------------------------------------------------

double telegraph_expectation(const TelegraphParams& p,
                             const std::function<double(double)>& g0, double x,
                             double t, const QuadSpec& spec) {
  p.validate();
  if (p.v0 != Velocity::Symmetric) {
    throw std::invalid_argument(
        "telegraph_expectation: solves the unconditional (Symmetric) problem");
  }
  if (!(t >= 0.0)) throw std::domain_error("telegraph_expectation: t < 0");
  if (t == 0.0) return g0(x);

  const double lambda = p.lambda, c = p.c;
  const double boundary = 0.5 * std::exp(-lambda * t) * (g0(x + c * t) + g0(x - c * t));

  auto kernel = [lambda, t, x, c, &g0](double u) {
    const double w = std::sqrt((t - u) * (t + u));
    const double decay = std::exp(-lambda * (u * u) / (t + w));
    const double z = lambda * w;
    return g0(x + c * u) * decay *
           (lambda * bessel_i0_scaled(z) +
            lambda * lambda * t * bessel_i1_scaled_over_z(z));
  };
  return boundary + 0.5 * integrate(kernel, -t, t, spec, {true, true});
}

}  // namespace telegraph
