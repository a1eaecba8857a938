// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "telegraph/mixed_law.hpp"
#include "telegraph/rng.hpp"
#include "telegraph/telegraph_laws.hpp"

// Event-driven Monte Carlo of the telegraph motion and its occupation
// functionals. Serves as the universal independent oracle for the exact and
// limiting laws.

namespace telegraph {

struct PathRecord {
  int v0_sign = +1;                    // +1 or -1
  std::vector<double> reversal_times;  // strictly increasing, in (0, T]
  double horizon = 0.0;
};

struct ProbeFunction {
  enum class Kind { Heaviside, AtanHalf, AtanCosHalf, Custom };

  Kind kind = Kind::Heaviside;
  double f_minus = 0.0;  // limit (Cesaro limit for the cos probe) at -inf
  double f_plus = 1.0;   // ... at +inf
  std::function<double(double)> fn;  // Custom only
  std::string name = "heaviside";

  double operator()(double x) const;

  static ProbeFunction heaviside();
  static ProbeFunction atan_half();      // arctan(x)/pi + 1/2
  static ProbeFunction atan_cos_half();  // arctan(x)/pi + cos(x) + 1/2
  static ProbeFunction custom(std::function<double(double)> f, double f_minus,
                              double f_plus);
  static ProbeFunction from_name(const std::string& name);
};

struct EmpiricalSummary {
  long n_runs = 0;
  double bin_width = 0.01;
  long k_lo = 0;  // leftmost bin is [k_lo*bin_width, (k_lo+1)*bin_width)
  std::vector<long> bin_counts;
  long exact_zero_count = 0;  // eta exactly 0, kept out of the bins
  long exact_one_count = 0;   // eta exactly 1
  std::uint64_t seed = 0;
  nlohmann::json params;

  double bin_left(std::size_t i) const { return (k_lo + (long)i) * bin_width; }
  double bin_right(std::size_t i) const { return (k_lo + (long)i + 1) * bin_width; }

  /// empirical CDF; atoms at exactly 0 and 1 jump, binned mass interpolates
  double cdf(double t) const;
  double cdf_left(double t) const;

  /// fraction of samples in [a, b], edge-closed at 0 and 1 like the exact
  /// box probability
  double box_frequency(double a, double b) const;

  /// fraction of samples strictly outside [0, 1] (possible for probes that
  /// overshoot the unit interval)
  double outside_unit_fraction() const;

  void write_csv(std::ostream& os) const;      // bin_left,bin_right,count
  nlohmann::json sidecar() const;              // n_runs, seed, counters, params
  static EmpiricalSummary from_files(const std::string& csv_text,
                                     const nlohmann::json& sidecar);
};

/// Poisson reversal times on (0, T]; Symmetric draws the sign first from the
/// same stream. Deterministic in (stream state).
PathRecord sample_path(const TelegraphParams& p, SplitMix64& stream);

/// (1/T) Int_0^T f(x + X_t) dt along one path. Heaviside probes use the
/// exact per-segment crossing time, so 0 and 1 are attained exactly; smooth
/// probes use 16-point Gauss-Legendre on subdivided segments.
double occupation(const PathRecord& path, const TelegraphParams& p, double x,
                  const ProbeFunction& f);

/// Bin a finished sample (exact 0/1 values go to the dedicated counters;
/// bins always cover at least [0,1] and extend to the observed range).
EmpiricalSummary summarize(const std::vector<double>& values, double bin_width,
                           std::uint64_t seed, nlohmann::json params);

/// n_runs independent replicas; replica i draws from stream_for(seed, i).
/// Bit-identical output for any worker count.
EmpiricalSummary run_experiment(const TelegraphParams& p, double x,
                                const ProbeFunction& f, long n_runs,
                                std::uint64_t seed, double bin_width = 0.01,
                                int n_workers = 0);

/// sup |F_emp - F_law| over bin edges and atom locations, both one-sided
/// limits at atoms.
double ks_statistic(const EmpiricalSummary& emp, const MixedLaw& law);

struct McEstimate {
  double mean;
  double std_err;
};

/// Sample mean of g0(x + X_t) with standard error.
McEstimate mc_expectation(const TelegraphParams& p,
                          const std::function<double(double)>& g0, double x,
                          double t, long n_runs, std::uint64_t seed,
                          int n_workers = 0);

}  // namespace telegraph
