// SPDX-License-Identifier: MIT
#include "telegraph/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "telegraph/laplace_oracles.hpp"
#include "telegraph/limit_laws.hpp"
#include "telegraph/simulator.hpp"

namespace telegraph {

namespace {

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void write_law(const MixedLaw& law, const std::string& path,
               const std::string& format) {
  std::ofstream file;
  std::ostream& os = open_out(file, path);
  if (format == "json") {
    os << law.to_json().dump(2) << "\n";
    return;
  }
  for (const Atom& a : law.atoms()) {
    os << "# atom," << a.y << "," << a.mass << "\n";
  }
  os << "y,pdf\n";
  char buf[80];
  for (const GridPoint& g : law.grid()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", g.y, g.pdf);
    os << buf;
  }
}

std::function<double(double)> g0_by_name(const std::string& name) {
  if (name == "one") return [](double) { return 1.0; };
  if (name == "cos") return [](double x) { return std::cos(x); };
  if (name == "gauss") return [](double x) { return std::exp(-0.5 * x * x); };
  if (name == "atan") return [](double x) { return std::atan(x); };
  throw CLI::ValidationError("--g0", "unknown initial profile: " + name);
}

struct CommonParams {
  double lambda = 1.0;
  double c = 1.0;
  double T = 1000.0;
  std::string v0 = "plus";
  TelegraphParams resolve() const {
    return {lambda, c, T, velocity_from_string(v0)};
  }
};

void add_process_flags(CLI::App* cmd, CommonParams& p, bool with_T = true) {
  cmd->add_option("--lambda", p.lambda, "reversal rate")->check(CLI::PositiveNumber);
  cmd->add_option("--c", p.c, "speed")->check(CLI::PositiveNumber);
  if (with_T) {
    cmd->add_option("--T", p.T, "time horizon")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--v0", p.v0, "initial velocity: plus|minus|symmetric")
      ->check(CLI::IsMember({"plus", "minus", "symmetric"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"occupation-time laws of the telegraph process"};
  app.require_subcommand(1);
  app.set_config("--config");

  // ---- law ----------------------------------------------------------------
  auto law_params = std::make_shared<CommonParams>();
  auto law_x = std::make_shared<double>(0.0);
  auto law_grid = std::make_shared<int>(512);
  auto law_out = std::make_shared<std::string>();
  auto law_format = std::make_shared<std::string>("json");
  CLI::App* law = app.add_subcommand(
      "law", "exact occupation-fraction law at horizon T (x = 0 or offset)");
  add_process_flags(law, *law_params);
  law->add_option("--x", *law_x, "starting offset (0 = origin law)");
  law->add_option("--grid-size", *law_grid, "density grid size")
      ->check(CLI::Range(64, 1 << 20));
  law->add_option("--out", *law_out, "output path (default stdout)");
  law->add_option("--format", *law_format)->check(CLI::IsMember({"json", "csv"}));

  // ---- limit --------------------------------------------------------------
  auto limit_a = std::make_shared<double>(0.0);
  auto limit_grid = std::make_shared<int>(512);
  auto limit_out = std::make_shared<std::string>();
  auto limit_format = std::make_shared<std::string>("json");
  CLI::App* limit = app.add_subcommand("limit", "long-horizon limit law for drift a");
  limit->add_option("--a", *limit_a, "limit of (c^2 T/lambda)^{-1/2} x");
  limit->add_option("--grid-size", *limit_grid)->check(CLI::Range(64, 1 << 20));
  limit->add_option("--out", *limit_out, "output path (default stdout)");
  limit->add_option("--format", *limit_format)->check(CLI::IsMember({"json", "csv"}));

  // ---- hitting ------------------------------------------------------------
  auto hit_params = std::make_shared<CommonParams>();
  auto hit_x = std::make_shared<double>(-1.0);
  auto hit_umax = std::make_shared<double>(0.0);
  auto hit_points = std::make_shared<int>(512);
  auto hit_out = std::make_shared<std::string>();
  CLI::App* hitting =
      app.add_subcommand("hitting", "first-passage density grid (CSV)");
  hit_params->v0 = "plus";
  add_process_flags(hitting, *hit_params, false);
  hitting->add_option("--x", *hit_x, "starting offset, must be < 0");
  hitting->add_option("--u-max", *hit_umax, "grid end (default T0 + 60/lambda)");
  hitting->add_option("--points", *hit_points)->check(CLI::Range(2, 1 << 20));
  hitting->add_option("--out", *hit_out, "output path (default stdout)");

  // ---- simulate -------------------------------------------------------
  auto sim_params = std::make_shared<CommonParams>();
  auto sim_x = std::make_shared<double>(0.0);
  auto sim_probe = std::make_shared<std::string>("heaviside");
  auto sim_n = std::make_shared<long>(10000);
  auto sim_seed = std::make_shared<std::uint64_t>(0);
  auto sim_bin = std::make_shared<double>(0.01);
  auto sim_workers = std::make_shared<int>(0);
  auto sim_out = std::make_shared<std::string>();
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo histogram of the occupation fraction");
  add_process_flags(simulate, *sim_params);
  simulate->add_option("--x", *sim_x, "starting offset");
  simulate->add_option("--probe", *sim_probe, "heaviside|atan-half|atan-cos-half")
      ->check(CLI::IsMember({"heaviside", "atan-half", "atan-cos-half"}));
  simulate->add_option("--n", *sim_n, "number of runs")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", *sim_seed, "RNG seed")->required();
  simulate->add_option("--bin-width", *sim_bin)->check(CLI::PositiveNumber);
  simulate->add_option("--workers", *sim_workers, "0 = hardware concurrency");
  simulate->add_option("--out", *sim_out, "output prefix (.csv and .json)")
      ->required();

  // ---- verify ---------------------------------------------------------
  auto verify_suite = std::make_shared<std::string>("all");
  auto verify_out = std::make_shared<std::string>();
  CLI::App* verify =
      app.add_subcommand("verify", "run the Laplace-domain identity checks");
  verify->add_option(
      "--suite", *verify_suite,
      "all|beta0|w0|phi-transform|y-transform|hitting|origin-roundtrip|"
      "offset-roundtrip");
  verify->add_option("--out", *verify_out, "report path (default stdout)");

  // ---- solve-te -------------------------------------------------------
  auto te_params = std::make_shared<CommonParams>();
  auto te_g0 = std::make_shared<std::string>("cos");
  auto te_xmin = std::make_shared<double>(-2.0);
  auto te_xmax = std::make_shared<double>(2.0);
  auto te_nx = std::make_shared<int>(41);
  auto te_tmin = std::make_shared<double>(0.0);
  auto te_tmax = std::make_shared<double>(2.0);
  auto te_nt = std::make_shared<int>(21);
  auto te_out = std::make_shared<std::string>();
  CLI::App* solve_te = app.add_subcommand(
      "solve-te", "expectation E[g0(x + X_t)] on an (x, t) grid (CSV)");
  te_params->v0 = "symmetric";
  solve_te->add_option("--lambda", te_params->lambda)->check(CLI::PositiveNumber);
  solve_te->add_option("--c", te_params->c)->check(CLI::PositiveNumber);
  solve_te->add_option("--g0", *te_g0, "one|cos|gauss|atan");
  solve_te->add_option("--x-min", *te_xmin);
  solve_te->add_option("--x-max", *te_xmax);
  solve_te->add_option("--nx", *te_nx)->check(CLI::Range(1, 100000));
  solve_te->add_option("--t-min", *te_tmin)->check(CLI::NonNegativeNumber);
  solve_te->add_option("--t-max", *te_tmax)->check(CLI::PositiveNumber);
  solve_te->add_option("--nt", *te_nt)->check(CLI::Range(1, 100000));
  solve_te->add_option("--out", *te_out, "output path (default stdout)");

  // ---- compare --------------------------------------------------------
  auto cmp_hist = std::make_shared<std::string>();
  auto cmp_law = std::make_shared<std::string>("arcsine");
  auto cmp_out = std::make_shared<std::string>();
  CLI::App* compare = app.add_subcommand(
      "compare", "overlay a simulated histogram with a scaled exact density");
  compare->add_option("--hist", *cmp_hist, "simulation output prefix")->required();
  compare->add_option("--law", *cmp_law, "law JSON path, or 'arcsine'");
  compare->add_option("--out", *cmp_out, "output path (default stdout)");

  // ---------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.push_back("telegraph");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (law->parsed()) {
      TelegraphParams p = law_params->resolve();
      MixedLaw result = (*law_x == 0.0) ? origin_law(p, *law_grid)
                                        : offset_law(p, *law_x, *law_grid);
      write_law(result, *law_out, *law_format);
    } else if (limit->parsed()) {
      MixedLaw result = limit_law({*limit_a, *limit_grid});
      write_law(result, *limit_out, *limit_format);
    } else if (hitting->parsed()) {
      TelegraphParams p = hit_params->resolve();
      HittingLaw h = hitting_law(p, *hit_x);
      const double umax =
          *hit_umax > 0.0 ? *hit_umax : h.t0 + 60.0 / p.lambda;
      if (umax <= h.t0) throw std::domain_error("--u-max must exceed T0");
      std::ofstream file;
      std::ostream& os = open_out(file, *hit_out);
      os << "# t0," << h.t0 << ",atom," << h.atom_at_t0 << "\n";
      os << "u,density\n";
      char buf[80];
      for (int j = 0; j < *hit_points; ++j) {
        const double u = h.t0 + (umax - h.t0) * j / (*hit_points - 1);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", u, h.density(u));
        os << buf;
      }
    } else if (simulate->parsed()) {
      TelegraphParams p = sim_params->resolve();
      EmpiricalSummary s =
          run_experiment(p, *sim_x, ProbeFunction::from_name(*sim_probe), *sim_n,
                         *sim_seed, *sim_bin, *sim_workers);
      std::ofstream csv(*sim_out + ".csv");
      if (!csv) throw std::runtime_error("cannot open " + *sim_out + ".csv");
      s.write_csv(csv);
      std::ofstream sidecar(*sim_out + ".json");
      if (!sidecar) throw std::runtime_error("cannot open " + *sim_out + ".json");
      sidecar << s.sidecar().dump(2) << "\n";
    } else if (verify->parsed()) {
      const auto results = run_verification(*verify_suite);
      std::ofstream file;
      std::ostream& os = open_out(file, *verify_out);
      os << to_json(results).dump(2) << "\n";
      bool ok = true;
      for (const CheckResult& r : results) {
        std::cerr << (r.pass ? "pass " : "FAIL ") << r.check << " "
                  << r.params.dump() << " |err|=" << r.abs_err << " tol=" << r.tol
                  << "\n";
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    } else if (solve_te->parsed()) {
      TelegraphParams p = te_params->resolve();
      p.T = std::max(*te_tmax, 1.0);
      auto g0 = g0_by_name(*te_g0);
      std::ofstream file;
      std::ostream& os = open_out(file, *te_out);
      os << "x,t,v\n";
      char buf[120];
      for (int i = 0; i < *te_nx; ++i) {
        const double x = *te_nx == 1 ? *te_xmin
                                     : *te_xmin + (*te_xmax - *te_xmin) * i /
                                           (*te_nx - 1);
        for (int j = 0; j < *te_nt; ++j) {
          const double t = *te_nt == 1 ? *te_tmin
                                       : *te_tmin + (*te_tmax - *te_tmin) * j /
                                             (*te_nt - 1);
          const double v = telegraph_expectation(p, g0, x, t);
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x, t, v);
          os << buf;
        }
      }
    } else if (compare->parsed()) {
      std::ifstream csv(*cmp_hist + ".csv");
      if (!csv) throw std::runtime_error("cannot open " + *cmp_hist + ".csv");
      std::stringstream csv_text;
      csv_text << csv.rdbuf();
      std::ifstream sidecar_in(*cmp_hist + ".json");
      if (!sidecar_in) throw std::runtime_error("cannot open " + *cmp_hist + ".json");
      nlohmann::json sidecar = nlohmann::json::parse(sidecar_in);
      EmpiricalSummary emp = EmpiricalSummary::from_files(csv_text.str(), sidecar);

      MixedLaw law_obj;
      if (*cmp_law == "arcsine") {
        law_obj = limit_law({0.0, 512});
      } else {
        std::ifstream law_in(*cmp_law);
        if (!law_in) throw std::runtime_error("cannot open " + *cmp_law);
        law_obj = MixedLaw::from_json(nlohmann::json::parse(law_in));
      }

      // the red-curve convention: density scaled by N * Delta
      std::ofstream file;
      std::ostream& os = open_out(file, *cmp_out);
      os << "bin_left,bin_right,count,scaled_density\n";
      char buf[140];
      const double scale = static_cast<double>(emp.n_runs) * emp.bin_width;
      for (std::size_t i = 0; i < emp.bin_counts.size(); ++i) {
        const double mid = 0.5 * (emp.bin_left(i) + emp.bin_right(i));
        const double pdf = law_obj.pdf(mid);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%ld,%.17g\n", emp.bin_left(i),
                      emp.bin_right(i), emp.bin_counts[i], pdf * scale);
        os << buf;
      }
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what()
              << " (estimate " << e.estimate() << ", bound " << e.error_bound()
              << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace telegraph
