// SPDX-License-Identifier: MIT
#include "telegraph/mixed_law.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace telegraph {

namespace {

// Chebyshev-extrema nodes on [lo, hi]: clustered at both edges, where the
// densities of interest peak or carry integrable poles.
std::vector<double> chebyshev_nodes(double lo, double hi, int n) {
  std::vector<double> ys(n);
  for (int j = 0; j < n; ++j) {
    const double t = 0.5 * (1.0 - std::cos(M_PI * j / (n - 1)));
    ys[j] = lo + (hi - lo) * t;
  }
  ys.front() = lo;
  ys.back() = hi;
  return ys;
}

double clamp_pdf(double v, double where) {
  if (v < -1e-9) {
    throw std::logic_error("MixedLaw: negative density " + std::to_string(v) +
                           " at y=" + std::to_string(where));
  }
  return std::max(v, 0.0);
}

void sort_atoms_checked(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.y < b.y; });
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].y == atoms[i - 1].y) {
      throw std::invalid_argument("MixedLaw: duplicate atom location");
    }
  }
}

}  // namespace

MixedLaw MixedLaw::from_density(std::vector<Atom> atoms,
                                std::function<double(double)> density,
                                double support_lo, double support_hi, int grid_size,
                                SingularEnds ends, const QuadSpec& spec,
                                nlohmann::json params) {
  if (grid_size < 64) throw std::invalid_argument("MixedLaw: grid_size must be >= 64");
  if (!(support_lo < support_hi)) {
    throw std::invalid_argument("MixedLaw: empty support");
  }

  MixedLaw law;
  law.atoms_ = std::move(atoms);
  sort_atoms_checked(law.atoms_);
  law.density_ = std::move(density);
  law.support_lo_ = support_lo;
  law.support_hi_ = support_hi;
  law.ends_ = ends;
  law.spec_ = spec;
  law.params_ = std::move(params);

  std::vector<double> nodes = chebyshev_nodes(support_lo, support_hi, grid_size);
  // flagged endpoints carry a pole; keep all stored pdf values finite
  if (ends.left) nodes.erase(nodes.begin());
  if (ends.right) nodes.pop_back();

  law.grid_.resize(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) {
    law.grid_[j] = {nodes[j], clamp_pdf(law.density_(nodes[j]), nodes[j])};
  }

  law.cum_.resize(nodes.size());
  law.head_mass_ =
      ends.left ? integrate(law.density_, support_lo, nodes.front(), spec,
                            {true, false})
                : 0.0;
  law.cum_[0] = law.head_mass_;
  for (size_t j = 1; j < nodes.size(); ++j) {
    law.cum_[j] = law.cum_[j - 1] + integrate(law.density_, nodes[j - 1], nodes[j], spec);
  }
  law.tail_mass_ = ends.right ? integrate(law.density_, nodes.back(), support_hi, spec,
                                          {false, true})
                              : 0.0;
  return law;
}

MixedLaw MixedLaw::atoms_only(std::vector<Atom> atoms, int grid_size,
                              nlohmann::json params) {
  if (grid_size < 64) throw std::invalid_argument("MixedLaw: grid_size must be >= 64");
  MixedLaw law;
  law.atoms_ = std::move(atoms);
  sort_atoms_checked(law.atoms_);
  law.params_ = std::move(params);
  const std::vector<double> nodes = chebyshev_nodes(0.0, 1.0, grid_size);
  law.grid_.resize(nodes.size());
  for (size_t j = 0; j < nodes.size(); ++j) law.grid_[j] = {nodes[j], 0.0};
  law.cum_.assign(nodes.size(), 0.0);
  return law;
}

double MixedLaw::continuous_mass() const {
  return cum_.empty() ? 0.0 : cum_.back() + tail_mass_;
}

double MixedLaw::atom_mass() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.mass;
  return m;
}

double MixedLaw::atom_mass_at(double y) const {
  for (const Atom& a : atoms_) {
    if (a.y == y) return a.mass;
  }
  return 0.0;
}

double MixedLaw::continuous_cdf(double y, bool exact) const {
  if (grid_.empty() || y <= support_lo_) return 0.0;
  if (y >= support_hi_) return continuous_mass();

  // head segment [support_lo, first node)
  if (y < grid_.front().y) {
    if (exact && density_) {
      return scale_ * integrate(density_, support_lo_, y, spec_, {ends_.left, false});
    }
    // pdf ~ C (y-lo)^{-1/2} on a flagged head: mass grows like sqrt
    const double frac = (y - support_lo_) / (grid_.front().y - support_lo_);
    return head_mass_ * (ends_.left ? std::sqrt(frac) : frac);
  }

  // tail segment (last node, support_hi)
  if (y > grid_.back().y) {
    const double base = cum_.back();
    if (exact && density_) {
      return base + scale_ * integrate(density_, grid_.back().y, y, spec_);
    }
    const double frac = (support_hi_ - y) / (support_hi_ - grid_.back().y);
    return base + tail_mass_ * (ends_.right ? 1.0 - std::sqrt(frac) : 1.0 - frac);
  }

  // interior cell
  const auto it = std::upper_bound(
      grid_.begin(), grid_.end(), y,
      [](double v, const GridPoint& g) { return v < g.y; });
  const size_t k = static_cast<size_t>(it - grid_.begin()) - 1;
  if (grid_[k].y == y) return cum_[k];
  if (exact && density_) {
    return cum_[k] + scale_ * integrate(density_, grid_[k].y, y, spec_);
  }
  const GridPoint& g0 = grid_[k];
  const GridPoint& g1 = grid_[k + 1];
  const double w = (y - g0.y) / (g1.y - g0.y);
  const double pdf_y = g0.pdf + w * (g1.pdf - g0.pdf);
  return cum_[k] + 0.5 * (g0.pdf + pdf_y) * (y - g0.y);
}

double MixedLaw::cdf_continuous(double y) const { return continuous_cdf(y, true); }

double MixedLaw::cdf(double y) const {
  double m = continuous_cdf(y, true);
  for (const Atom& a : atoms_) {
    if (a.y <= y) m += a.mass;
  }
  return m;
}

double MixedLaw::cdf_left(double y) const { return cdf(y) - atom_mass_at(y); }

double MixedLaw::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
  auto approx_cdf = [this](double y) {
    double m = continuous_cdf(y, false);
    for (const Atom& a : atoms_) {
      if (a.y <= y) m += a.mass;
    }
    return m;
  };
  if (u <= approx_cdf(0.0)) return 0.0;
  if (u > approx_cdf(1.0) - atom_mass_at(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (approx_cdf(mid) >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double MixedLaw::pdf(double y) const {
  if (y < support_lo_ || y > support_hi_ || grid_.empty()) return 0.0;
  // a flagged endpoint carries an integrable pole: report the nearest stored
  // sample rather than evaluating the callable at its singularity
  if (ends_.left && y <= grid_.front().y) return grid_.front().pdf;
  if (ends_.right && y >= grid_.back().y) return grid_.back().pdf;
  if (density_) return scale_ * std::max(density_(y), 0.0);
  // grid interpolation, constant extrapolation into head/tail segments
  if (y <= grid_.front().y) return grid_.front().pdf;
  if (y >= grid_.back().y) return grid_.back().pdf;
  const auto it = std::upper_bound(
      grid_.begin(), grid_.end(), y,
      [](double v, const GridPoint& g) { return v < g.y; });
  const size_t k = static_cast<size_t>(it - grid_.begin()) - 1;
  const double w = (y - grid_[k].y) / (grid_[k + 1].y - grid_[k].y);
  return grid_[k].pdf + w * (grid_[k + 1].pdf - grid_[k].pdf);
}

MixedLaw MixedLaw::reflected() const {
  MixedLaw r;
  r.atoms_.reserve(atoms_.size());
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    r.atoms_.push_back({1.0 - it->y, it->mass});
  }
  r.grid_.resize(grid_.size());
  r.cum_.resize(cum_.size());
  const size_t n = grid_.size();
  for (size_t j = 0; j < n; ++j) {
    r.grid_[j] = {1.0 - grid_[n - 1 - j].y, grid_[n - 1 - j].pdf};
  }
  // reversed cumulative: mass below reflected node j = tail + cells above
  // the mirrored node in the source law
  const double full = continuous_mass();
  for (size_t j = 0; j < n; ++j) {
    r.cum_[j] = full - cum_[n - 1 - j];
  }
  r.head_mass_ = tail_mass_;
  r.tail_mass_ = head_mass_;
  if (density_) {
    auto d = density_;
    r.density_ = [d](double y) { return d(1.0 - y); };
  }
  r.support_lo_ = 1.0 - support_hi_;
  r.support_hi_ = 1.0 - support_lo_;
  r.ends_ = {ends_.right, ends_.left};
  r.spec_ = spec_;
  r.scale_ = scale_;
  r.params_ = params_;
  return r;
}

MixedLaw MixedLaw::mixture(const MixedLaw& a, double wa, const MixedLaw& b, double wb) {
  if (a.grid_.size() != b.grid_.size() || a.support_lo_ != b.support_lo_ ||
      a.support_hi_ != b.support_hi_) {
    throw std::invalid_argument("MixedLaw::mixture: incompatible grids");
  }
  MixedLaw m;
  m.grid_.resize(a.grid_.size());
  m.cum_.resize(a.cum_.size());
  for (size_t j = 0; j < a.grid_.size(); ++j) {
    if (a.grid_[j].y != b.grid_[j].y) {
      throw std::invalid_argument("MixedLaw::mixture: node mismatch");
    }
    m.grid_[j] = {a.grid_[j].y, wa * a.grid_[j].pdf + wb * b.grid_[j].pdf};
    m.cum_[j] = wa * a.cum_[j] + wb * b.cum_[j];
  }
  m.head_mass_ = wa * a.head_mass_ + wb * b.head_mass_;
  m.tail_mass_ = wa * a.tail_mass_ + wb * b.tail_mass_;

  std::set<double> locs;
  for (const Atom& at : a.atoms_) locs.insert(at.y);
  for (const Atom& at : b.atoms_) locs.insert(at.y);
  for (double y : locs) {
    m.atoms_.push_back({y, wa * a.atom_mass_at(y) + wb * b.atom_mass_at(y)});
  }

  if (a.density_ && b.density_) {
    auto da = a.density_, db = b.density_;
    const double sa = wa * a.scale_, sb = wb * b.scale_;
    m.density_ = [da, db, sa, sb](double y) { return sa * da(y) + sb * db(y); };
  }
  m.support_lo_ = a.support_lo_;
  m.support_hi_ = a.support_hi_;
  m.ends_ = {a.ends_.left || b.ends_.left, a.ends_.right || b.ends_.right};
  m.spec_ = a.spec_;
  m.params_ = a.params_;
  return m;
}

void MixedLaw::renormalize() {
  const double total = total_mass();
  if (!(total > 0.0)) throw std::logic_error("MixedLaw::renormalize: zero mass");
  const double inv = 1.0 / total;
  for (Atom& a : atoms_) a.mass *= inv;
  for (GridPoint& g : grid_) g.pdf *= inv;
  for (double& c : cum_) c *= inv;
  head_mass_ *= inv;
  tail_mass_ *= inv;
  scale_ *= inv;
}

nlohmann::json MixedLaw::to_json() const {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& a : atoms_) atoms.push_back({{"y", a.y}, {"mass", a.mass}});
  nlohmann::json grid = nlohmann::json::array();
  for (const GridPoint& g : grid_) grid.push_back({{"y", g.y}, {"pdf", g.pdf}});
  nlohmann::json params = params_.is_null() ? nlohmann::json::object() : params_;
  params["support"] = {support_lo_, support_hi_};
  params["singular"] = {ends_.left, ends_.right};
  return {{"atoms", atoms}, {"grid", grid}, {"params", params}};
}

MixedLaw MixedLaw::from_json(const nlohmann::json& j) {
  MixedLaw law;
  for (const auto& a : j.at("atoms")) {
    law.atoms_.push_back({a.at("y").get<double>(), a.at("mass").get<double>()});
  }
  sort_atoms_checked(law.atoms_);
  for (const auto& g : j.at("grid")) {
    law.grid_.push_back({g.at("y").get<double>(), g.at("pdf").get<double>()});
  }
  law.params_ = j.value("params", nlohmann::json::object());
  if (law.params_.contains("support")) {
    law.support_lo_ = law.params_["support"][0].get<double>();
    law.support_hi_ = law.params_["support"][1].get<double>();
  } else if (!law.grid_.empty()) {
    law.support_lo_ = law.grid_.front().y;
    law.support_hi_ = law.grid_.back().y;
  }
  if (law.params_.contains("singular")) {
    law.ends_.left = law.params_["singular"][0].get<bool>();
    law.ends_.right = law.params_["singular"][1].get<bool>();
  }

  // rebuild the cumulative table from the stored samples: trapezoid between
  // nodes, sqrt-profile head/tail for flagged edges
  const size_t n = law.grid_.size();
  law.cum_.assign(n, 0.0);
  if (n > 0) {
    law.head_mass_ = 0.0;
    if (law.grid_.front().y > law.support_lo_) {
      const double h = law.grid_.front().y - law.support_lo_;
      law.head_mass_ = law.ends_.left ? 2.0 * law.grid_.front().pdf * h
                                      : law.grid_.front().pdf * h;
    }
    law.cum_[0] = law.head_mass_;
    for (size_t k = 1; k < n; ++k) {
      law.cum_[k] = law.cum_[k - 1] + 0.5 *
                                          (law.grid_[k - 1].pdf + law.grid_[k].pdf) *
                                          (law.grid_[k].y - law.grid_[k - 1].y);
    }
    law.tail_mass_ = 0.0;
    if (law.grid_.back().y < law.support_hi_) {
      const double h = law.support_hi_ - law.grid_.back().y;
      law.tail_mass_ = law.ends_.right ? 2.0 * law.grid_.back().pdf * h
                                       : law.grid_.back().pdf * h;
    }
  }
  return law;
}

double box_probability(const MixedLaw& law, double a, double b) {
  if (!(a >= 0.0 && a < b && b <= 1.0)) {
    throw std::domain_error("box_probability: need 0 <= a < b <= 1");
  }
  double p = law.cdf_continuous(b) - law.cdf_continuous(a);
  for (const Atom& at : law.atoms()) {
    const bool inside = (at.y > a && at.y < b) || (at.y == a && a == 0.0) ||
                        (at.y == b && b == 1.0);
    if (inside) p += at.mass;
  }
  return p;
}

double sup_distance(const MixedLaw& a, const MixedLaw& b) {
  std::set<double> pts{0.0, 1.0};
  for (const GridPoint& g : a.grid()) pts.insert(g.y);
  for (const GridPoint& g : b.grid()) pts.insert(g.y);
  for (const Atom& at : a.atoms()) pts.insert(at.y);
  for (const Atom& at : b.atoms()) pts.insert(at.y);
  double d = 0.0;
  for (double t : pts) {
    d = std::max(d, std::abs(a.cdf(t) - b.cdf(t)));
    d = std::max(d, std::abs(a.cdf_left(t) - b.cdf_left(t)));
  }
  return d;
}

}  // namespace telegraph
