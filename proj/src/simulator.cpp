// SPDX-License-Identifier: MIT
#include "telegraph/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace telegraph {

// ---------------------------------------------------------------------------
// Probes
// ---------------------------------------------------------------------------

double ProbeFunction::operator()(double x) const {
  switch (kind) {
    case Kind::Heaviside: return x > 0.0 ? 1.0 : 0.0;
    case Kind::AtanHalf: return std::atan(x) / M_PI + 0.5;
    case Kind::AtanCosHalf: return std::atan(x) / M_PI + std::cos(x) + 0.5;
    case Kind::Custom: return fn(x);
  }
  return 0.0;
}

ProbeFunction ProbeFunction::heaviside() { return {}; }

ProbeFunction ProbeFunction::atan_half() {
  ProbeFunction p;
  p.kind = Kind::AtanHalf;
  p.name = "atan-half";
  return p;
}

ProbeFunction ProbeFunction::atan_cos_half() {
  ProbeFunction p;
  p.kind = Kind::AtanCosHalf;
  p.name = "atan-cos-half";  // limits exist only in the Cesaro sense
  return p;
}

ProbeFunction ProbeFunction::custom(std::function<double(double)> f, double f_minus,
                                    double f_plus) {
  ProbeFunction p;
  p.kind = Kind::Custom;
  p.fn = std::move(f);
  p.f_minus = f_minus;
  p.f_plus = f_plus;
  p.name = "custom";
  return p;
}

ProbeFunction ProbeFunction::from_name(const std::string& name) {
  if (name == "heaviside") return heaviside();
  if (name == "atan-half") return atan_half();
  if (name == "atan-cos-half") return atan_cos_half();
  throw std::invalid_argument("unknown probe: " + name);
}

// ---------------------------------------------------------------------------
// Path sampling and occupation
// ---------------------------------------------------------------------------

PathRecord sample_path(const TelegraphParams& p, SplitMix64& stream) {
  p.validate();
  PathRecord path;
  path.horizon = p.T;
  switch (p.v0) {
    case Velocity::Plus: path.v0_sign = +1; break;
    case Velocity::Minus: path.v0_sign = -1; break;
    case Velocity::Symmetric: path.v0_sign = stream.coin() ? +1 : -1; break;
  }
  double t = stream.exponential(p.lambda);
  while (t <= p.T) {
    path.reversal_times.push_back(t);
    t += stream.exponential(p.lambda);
  }
  return path;
}

namespace {

// exact time spent strictly above zero on a linear segment z0 -> z0 + v*dt
double positive_time(double z0, double v, double dt) {
  const double z1 = z0 + v * dt;
  if (z0 > 0.0 && z1 > 0.0) return dt;
  if (z0 <= 0.0 && z1 <= 0.0) return 0.0;
  const double crossing = -z0 / v;
  return v > 0.0 ? dt - crossing : crossing;
}

}  // namespace

double occupation(const PathRecord& path, const TelegraphParams& p, double x,
                  const ProbeFunction& f) {
  const double T = path.horizon;
  const bool heaviside = f.kind == ProbeFunction::Kind::Heaviside;

  // chunk length for the smooth-probe quadrature: the probe argument moves
  // at speed c and segments arrive at rate lambda
  const double h_max = 1.0 / (1.0 + std::max(p.lambda, p.c));

  double acc = 0.0;
  bool touched_nonpositive = false;
  bool touched_positive = false;

  double z = x;
  double v = path.v0_sign * p.c;
  double prev = 0.0;

  auto segment = [&](double z0, double vel, double dt) {
    if (dt <= 0.0) return;
    const double z1 = z0 + vel * dt;
    if (std::min(z0, z1) < 0.0) touched_nonpositive = true;
    if (std::max(z0, z1) > 0.0) touched_positive = true;
    if (heaviside) {
      acc += positive_time(z0, vel, dt);
      return;
    }
    const long chunks = std::max(1L, static_cast<long>(std::ceil(dt / h_max)));
    const double h = dt / static_cast<double>(chunks);
    for (long k = 0; k < chunks; ++k) {
      acc += gauss_legendre_16([&](double t) { return f(z0 + vel * t); }, k * h,
                               (k + 1) * h);
    }
  };

  for (double sigma : path.reversal_times) {
    segment(z, v, sigma - prev);
    z += v * (sigma - prev);
    prev = sigma;
    v = -v;
  }
  segment(z, v, T - prev);

  if (heaviside) {
    if (!touched_nonpositive) return 1.0;
    if (!touched_positive) return 0.0;
  }
  return acc / T;
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

namespace {

void parallel_fill(long n, int n_workers, const std::function<void(long)>& body) {
  int workers = n_workers > 0
                    ? n_workers
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<long>(workers, std::max(1L, n));
  if (workers == 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long block = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = w * block;
    const long hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

EmpiricalSummary summarize(const std::vector<double>& values, double bin_width,
                           std::uint64_t seed, nlohmann::json params) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("summarize: bin_width <= 0");
  EmpiricalSummary s;
  s.n_runs = static_cast<long>(values.size());
  s.bin_width = bin_width;
  s.seed = seed;
  s.params = std::move(params);

  // bins always span [0, 1]; extend to the observed range in integer steps
  long k_lo = 0;
  long k_hi = static_cast<long>(std::ceil(1.0 / bin_width)) - 1;
  for (double v : values) {
    if (v == 0.0 || v == 1.0) continue;
    const long k = static_cast<long>(std::floor(v / bin_width));
    k_lo = std::min(k_lo, k);
    k_hi = std::max(k_hi, k);
  }
  s.k_lo = k_lo;
  s.bin_counts.assign(static_cast<std::size_t>(k_hi - k_lo + 1), 0);

  for (double v : values) {
    if (v == 0.0) {
      ++s.exact_zero_count;
    } else if (v == 1.0) {
      ++s.exact_one_count;
    } else {
      const long k = static_cast<long>(std::floor(v / bin_width));
      ++s.bin_counts[static_cast<std::size_t>(k - k_lo)];
    }
  }
  return s;
}

EmpiricalSummary run_experiment(const TelegraphParams& p, double x,
                                const ProbeFunction& f, long n_runs,
                                std::uint64_t seed, double bin_width,
                                int n_workers) {
  p.validate();
  if (n_runs < 1) throw std::invalid_argument("run_experiment: n_runs < 1");

  std::vector<double> values(static_cast<std::size_t>(n_runs));
  parallel_fill(n_runs, n_workers, [&](long i) {
    SplitMix64 stream = stream_for(seed, static_cast<std::uint64_t>(i));
    const PathRecord path = sample_path(p, stream);
    values[static_cast<std::size_t>(i)] = occupation(path, p, x, f);
  });

  nlohmann::json params = {{"lambda", p.lambda}, {"c", p.c},
                           {"T", p.T},           {"v0", to_string(p.v0)},
                           {"x", x},             {"probe", f.name},
                           {"bin_width", bin_width}};
  return summarize(values, bin_width, seed, std::move(params));
}

// ---------------------------------------------------------------------------
// Empirical CDF and KS distance
// ---------------------------------------------------------------------------

double EmpiricalSummary::cdf(double t) const {
  double count = 0.0;
  if (t >= 0.0) count += exact_zero_count;
  if (t >= 1.0) count += exact_one_count;
  for (std::size_t i = 0; i < bin_counts.size(); ++i) {
    if (bin_right(i) <= t) {
      count += bin_counts[i];
    } else if (bin_left(i) < t) {
      count += bin_counts[i] * (t - bin_left(i)) / bin_width;
    }
  }
  return count / static_cast<double>(n_runs);
}

double EmpiricalSummary::cdf_left(double t) const {
  double count = 0.0;
  if (t > 0.0) count += exact_zero_count;
  if (t > 1.0) count += exact_one_count;
  for (std::size_t i = 0; i < bin_counts.size(); ++i) {
    if (bin_right(i) <= t) {
      count += bin_counts[i];
    } else if (bin_left(i) < t) {
      count += bin_counts[i] * (t - bin_left(i)) / bin_width;
    }
  }
  return count / static_cast<double>(n_runs);
}

double EmpiricalSummary::box_frequency(double a, double b) const {
  if (!(a < b)) throw std::domain_error("box_frequency: need a < b");
  double count = 0.0;
  if (a == 0.0) count += exact_zero_count;
  if (b == 1.0) count += exact_one_count;
  for (std::size_t i = 0; i < bin_counts.size(); ++i) {
    const double l = bin_left(i), r = bin_right(i);
    const double overlap = std::min(r, b) - std::max(l, a);
    if (overlap <= 0.0) continue;
    count += bin_counts[i] * (overlap / bin_width);
  }
  return count / static_cast<double>(n_runs);
}

double EmpiricalSummary::outside_unit_fraction() const {
  double count = 0.0;
  for (std::size_t i = 0; i < bin_counts.size(); ++i) {
    if (bin_right(i) <= 0.0 || bin_left(i) >= 1.0) count += bin_counts[i];
  }
  return count / static_cast<double>(n_runs);
}

double ks_statistic(const EmpiricalSummary& emp, const MixedLaw& law) {
  std::vector<double> pts;
  pts.reserve(emp.bin_counts.size() + law.atoms().size() + 2);
  for (std::size_t i = 0; i <= emp.bin_counts.size(); ++i) {
    pts.push_back(emp.bin_left(i));  // bin_left(size) == last right edge
  }
  for (const Atom& a : law.atoms()) pts.push_back(a.y);
  double d = 0.0;
  for (double t : pts) {
    d = std::max(d, std::abs(emp.cdf(t) - law.cdf(t)));
    d = std::max(d, std::abs(emp.cdf_left(t) - law.cdf_left(t)));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Endpoint expectation
// ---------------------------------------------------------------------------

McEstimate mc_expectation(const TelegraphParams& p,
                          const std::function<double(double)>& g0, double x,
                          double t, long n_runs, std::uint64_t seed, int n_workers) {
  p.validate();
  if (!(t > 0.0 && t <= p.T)) {
    throw std::domain_error("mc_expectation: need 0 < t <= T");
  }
  TelegraphParams q = p;
  q.T = t;

  std::vector<double> values(static_cast<std::size_t>(n_runs));
  parallel_fill(n_runs, n_workers, [&](long i) {
    SplitMix64 stream = stream_for(seed, static_cast<std::uint64_t>(i));
    const PathRecord path = sample_path(q, stream);
    double z = 0.0, prev = 0.0;
    double v = path.v0_sign * q.c;
    for (double sigma : path.reversal_times) {
      z += v * (sigma - prev);
      prev = sigma;
      v = -v;
    }
    z += v * (t - prev);
    values[static_cast<std::size_t>(i)] = g0(x + z);
  });

  // ordered Neumaier sum: reproducible for any worker count
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double t0 = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t0) + v : (v - t0) + sum;
    sum = t0;
  }
  const double mean = (sum + comp) / static_cast<double>(n_runs);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double std_err =
      n_runs > 1 ? std::sqrt(ss / (static_cast<double>(n_runs) *
                                   static_cast<double>(n_runs - 1)))
                 : 0.0;
  return {mean, std_err};
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

void EmpiricalSummary::write_csv(std::ostream& os) const {
  os << "bin_left,bin_right,count\n";
  char buf[96];
  for (std::size_t i = 0; i < bin_counts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%ld\n", bin_left(i), bin_right(i),
                  bin_counts[i]);
    os << buf;
  }
}

nlohmann::json EmpiricalSummary::sidecar() const {
  return {{"n_runs", n_runs},
          {"seed", seed},
          {"exact_zero", exact_zero_count},
          {"exact_one", exact_one_count},
          {"params", params}};
}

EmpiricalSummary EmpiricalSummary::from_files(const std::string& csv_text,
                                              const nlohmann::json& sidecar) {
  EmpiricalSummary s;
  s.n_runs = sidecar.at("n_runs").get<long>();
  s.seed = sidecar.at("seed").get<std::uint64_t>();
  s.exact_zero_count = sidecar.at("exact_zero").get<long>();
  s.exact_one_count = sidecar.at("exact_one").get<long>();
  s.params = sidecar.value("params", nlohmann::json::object());
  s.bin_width = s.params.value("bin_width", 0.01);

  std::istringstream in(csv_text);
  std::string line;
  std::getline(in, line);  // header
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double l = 0.0, r = 0.0;
    long c = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%ld", &l, &r, &c) != 3) {
      throw std::runtime_error("EmpiricalSummary: malformed CSV row: " + line);
    }
    if (first) {
      s.bin_width = r - l;
      s.k_lo = static_cast<long>(std::llround(l / s.bin_width));
      first = false;
    }
    s.bin_counts.push_back(c);
  }
  return s;
}

}  // namespace telegraph
