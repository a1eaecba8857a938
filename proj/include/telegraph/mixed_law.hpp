// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "telegraph/special_fn.hpp"

namespace telegraph {

// A probability law on [0,1] with a discrete part (atoms) and an absolutely
// continuous part sampled on a grid. When built from an exact density
// callable, CDF and box probabilities are evaluated by quadrature against
// the callable; a law reloaded from JSON falls back to grid integration.

struct Atom {
  double y;
  double mass;
};

struct GridPoint {
  double y;
  double pdf;
};

class MixedLaw {
 public:
  MixedLaw() = default;

  /// Exact-density construction. The density is defined on
  /// [support_lo, support_hi] (zero outside); `ends` flags integrable
  /// inverse-square-root endpoint singularities. Grid nodes cluster at the
  /// support edges (Chebyshev spacing); flagged edges are excluded from the
  /// node set so every stored pdf value is finite.
  static MixedLaw from_density(std::vector<Atom> atoms,
                               std::function<double(double)> density,
                               double support_lo, double support_hi, int grid_size,
                               SingularEnds ends, const QuadSpec& spec,
                               nlohmann::json params = {});

  /// Purely discrete law (e.g. the sub-threshold unit atom at zero).
  /// A zero density grid over [0,1] is kept so the serialized shape is
  /// uniform.
  static MixedLaw atoms_only(std::vector<Atom> atoms, int grid_size,
                             nlohmann::json params = {});

  static MixedLaw from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  double continuous_mass() const;
  double atom_mass() const;
  double total_mass() const { return atom_mass() + continuous_mass(); }

  double atom_mass_at(double y) const;

  /// Right-continuous distribution function P(X <= y).
  double cdf(double y) const;
  /// Left limit P(X < y).
  double cdf_left(double y) const;
  /// Continuous part of the CDF only.
  double cdf_continuous(double y) const;

  /// Generalized inverse of the CDF; atoms at 0 and 1 are returned exactly.
  double quantile(double u) const;

  /// Density value (callable if available, else grid interpolation; zero
  /// outside the support).
  double pdf(double y) const;

  /// Law of 1 - X.
  MixedLaw reflected() const;

  /// wa * A + wb * B. Requires identical grids and support.
  static MixedLaw mixture(const MixedLaw& a, double wa, const MixedLaw& b, double wb);

  /// Scale atom masses and density so the total mass is exactly one.
  void renormalize();

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<GridPoint>& grid() const { return grid_; }
  const nlohmann::json& params() const { return params_; }
  void set_params(nlohmann::json p) { params_ = std::move(p); }
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  bool has_density_fn() const { return static_cast<bool>(density_); }

 private:
  double continuous_cdf(double y, bool exact) const;

  std::vector<Atom> atoms_;
  std::vector<GridPoint> grid_;
  std::vector<double> cum_;  // continuous mass from support_lo_ to grid_[k].y
  double head_mass_ = 0.0;   // mass in [support_lo_, grid_.front().y)
  double tail_mass_ = 0.0;   // mass in (grid_.back().y, support_hi_]
  std::function<double(double)> density_;
  double support_lo_ = 0.0;
  double support_hi_ = 1.0;
  SingularEnds ends_;
  QuadSpec spec_;
  double scale_ = 1.0;  // renormalization factor applied to the continuous part
  nlohmann::json params_;
};

/// Probability of the box [a, b], 0 <= a < b <= 1. The interval is treated
/// as half-open on both sides except that the closures at 0 and 1 are kept,
/// so adjacent boxes never double-count an interior atom while the edge
/// boxes of a histogram absorb the boundary atoms.
double box_probability(const MixedLaw& law, double a, double b);

/// sup_y |F_a(y) - F_b(y)| over the union of both laws' grid nodes and atom
/// locations (both one-sided limits at atoms).
double sup_distance(const MixedLaw& a, const MixedLaw& b);

}  // namespace telegraph
