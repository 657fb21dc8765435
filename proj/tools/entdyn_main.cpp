#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entdyn/errors.hpp"
#include "entdyn/experiment.hpp"
#include "entdyn/verify_suites.hpp"

namespace {

using entdyn::CapabilityError;
using entdyn::ConfigError;
using entdyn::Engine;
using entdyn::ExperimentConfig;

// Exit codes: 0 ok, 2 config/usage error, 3 capability error, 4 comparison
// or verification failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCapability = 3;
constexpr int kExitComparison = 4;

std::optional<ExperimentConfig> load_config(const std::string& path) {
  try {
    return ExperimentConfig::load_file(path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return std::nullopt;
  }
}

std::string hash_hex(const ExperimentConfig& cfg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(cfg.hash()));
  return buf;
}

int run_simulate(const std::string& config_path, const std::string& engine_name,
                 const std::string& out_path, const std::string& dump_path, bool as_printed) {
  const auto cfg = load_config(config_path);
  if (!cfg) return kExitConfig;

  if (!dump_path.empty()) {
    const std::string dump = cfg->canonical_dump();
    if (dump_path == "-") {
      std::cout << dump;
    } else {
      entdyn::write_file_atomic(dump_path, dump);
    }
    return kExitOk;
  }

  if (out_path.empty()) {
    std::cerr << "usage error: --out is required unless --dump-config is given\n";
    return kExitConfig;
  }
  const auto engine = entdyn::parse_engine(engine_name);
  if (!engine) {
    std::cerr << "usage error: unknown engine '" << engine_name
              << "' (expected super, oracle, or closed)\n";
    return kExitConfig;
  }

  try {
    const entdyn::ConcurrenceTrajectory traj = entdyn::run_engine(*cfg, *engine, as_printed);
    entdyn::write_file_atomic(out_path, entdyn::trajectory_csv(*cfg, traj));
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitCapability;
  }
  return kExitOk;
}

int run_compare(const std::string& config_path, const std::string& engines_arg,
                const std::string& out_path, double tol, bool as_printed) {
  const auto cfg = load_config(config_path);
  if (!cfg) return kExitConfig;

  std::vector<Engine> engines;
  std::string token;
  std::istringstream stream(engines_arg);
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    const auto engine = entdyn::parse_engine(token);
    if (!engine) {
      std::cerr << "usage error: unknown engine '" << token << "'\n";
      return kExitConfig;
    }
    if (std::find(engines.begin(), engines.end(), *engine) == engines.end()) {
      engines.push_back(*engine);
    }
  }
  if (engines.size() < 2) {
    std::cerr << "usage error: --engines needs at least two distinct engines\n";
    return kExitConfig;
  }

  // Comparison is concurrence-only; drop x columns so every engine can run.
  ExperimentConfig run_cfg = *cfg;
  run_cfg.out_x_components = false;

  std::vector<entdyn::ConcurrenceTrajectory> trajectories;
  try {
    for (Engine engine : engines) {
      trajectories.push_back(entdyn::run_engine(run_cfg, engine, as_printed));
    }
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitCapability;
  }

  nlohmann::ordered_json report;
  report["config_hash"] = hash_hex(*cfg);
  report["tol"] = tol;
  report["per_engine_summary"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < engines.size(); ++i) {
    const auto& c = trajectories[i].concurrence;
    double cmin = c.front(), cmax = c.front(), mean = 0.0;
    for (double v : c) {
      cmin = std::min(cmin, v);
      cmax = std::max(cmax, v);
      mean += v;
    }
    mean /= static_cast<double>(c.size());
    report["per_engine_summary"].push_back({{"engine", entdyn::to_string(engines[i])},
                                            {"min", cmin},
                                            {"max", cmax},
                                            {"mean", mean}});
  }

  bool pass = true;
  report["pairwise_max_deviation"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < engines.size(); ++i) {
    for (std::size_t j = i + 1; j < engines.size(); ++j) {
      const double dev = entdyn::max_deviation(trajectories[i], trajectories[j]);
      pass = pass && dev <= tol;
      report["pairwise_max_deviation"].push_back({{"a", entdyn::to_string(engines[i])},
                                                  {"b", entdyn::to_string(engines[j])},
                                                  {"max_deviation", dev}});
    }
  }
  report["pass"] = pass;

  const std::string text = report.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    entdyn::write_file_atomic(out_path, text);
    std::cout << (pass ? "PASS" : "FAIL") << " max pairwise deviation vs tol "
              << entdyn::format_double(tol) << "\n";
  }
  return pass ? kExitOk : kExitComparison;
}

int run_period(const std::string& config_path, std::int64_t max_denominator, double ratio_tol,
               int verify_samples, double verify_tol) {
  const auto cfg = load_config(config_path);
  if (!cfg) return kExitConfig;

  const auto freqs = entdyn::frequency_set(cfg->hamiltonian);
  if (!freqs) {
    std::cerr << "capability error: no frequency set is defined for this Hamiltonian "
                 "(expected a Josephson or exchange form)\n";
    return kExitCapability;
  }

  const entdyn::PeriodicityVerdict verdict = entdyn::classify(*freqs, max_denominator, ratio_tol);

  nlohmann::ordered_json out;
  out["kind"] = entdyn::to_string(verdict.kind);
  if (verdict.period) {
    out["period"] = *verdict.period;
  } else {
    out["period"] = nullptr;
  }
  out["witness"] = nlohmann::ordered_json::array();
  for (const entdyn::RationalApprox& w : verdict.witness) {
    out["witness"].push_back(
        {{"ratio", w.value}, {"p", w.num}, {"q", w.den}, {"error", w.error}});
  }

  bool verified = false;
  switch (verdict.kind) {
    case entdyn::PeriodicityKind::Constant:
      verified = true;  // a constant trajectory recurs trivially
      break;
    case entdyn::PeriodicityKind::Periodic:
      verified = entdyn::verify_period(cfg->hamiltonian.coeffs, cfg->initial_state,
                                       *verdict.period, verify_samples, verify_tol);
      break;
    case entdyn::PeriodicityKind::Aperiodic:
      verified = false;
      break;
  }
  out["verified"] = verified;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  entdyn::SuiteReport report;
  if (suite == "rows") {
    report = entdyn::run_rows_suite(seed);
  } else if (suite == "norm") {
    report = entdyn::run_norm_suite(seed);
  } else if (suite == "oracle") {
    report = entdyn::run_oracle_suite(seed);
  } else if (suite == "closedform") {
    report = entdyn::run_closedform_suite(seed);
  } else {
    std::cerr << "usage error: unknown suite '" << suite
              << "' (expected rows, norm, oracle, or closedform)\n";
    return kExitConfig;
  }
  std::cout << report.to_json().dump(2) << "\n";
  return report.pass() ? kExitOk : kExitComparison;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entdyn - entanglement dynamics of closed two-qubit systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string engine_name = "super";
  std::string out_path;
  std::string dump_path;
  std::string engines_arg;
  std::string suite;
  bool as_printed = false;
  double compare_tol = 1e-8;
  std::int64_t max_denominator = 64;
  double ratio_tol = 1e-9;
  int verify_samples = 128;
  double verify_tol = 1e-7;
  std::uint64_t seed = 20110526;

  auto* simulate = app.add_subcommand("simulate", "Sample a concurrence trajectory to CSV");
  simulate->add_option("--config", config_path, "experiment config (JSON)")->required();
  simulate->add_option("--engine", engine_name, "super|oracle|closed (default super)");
  simulate->add_option("--out", out_path, "output CSV path");
  simulate->add_option("--dump-config", dump_path,
                       "write the canonical config JSON to this path ('-' for stdout) and exit");
  simulate->add_flag("--as-printed-formula", as_printed,
                     "closed engine: use the verbatim XY/Ising formulas");

  auto* compare = app.add_subcommand("compare", "Run several engines and compare pointwise");
  compare->add_option("--config", config_path, "experiment config (JSON)")->required();
  compare->add_option("--engines", engines_arg, "comma-separated engine list")->required();
  compare->add_option("--tol", compare_tol, "max allowed pairwise deviation (default 1e-8)");
  compare->add_option("--out", out_path, "JSON report path ('-' for stdout)");
  compare->add_flag("--as-printed-formula", as_printed,
                    "closed engine: use the verbatim XY/Ising formulas");

  auto* period = app.add_subcommand("period", "Classify the concurrence evolution periodicity");
  period->add_option("--config", config_path, "experiment config (JSON)")->required();
  period->add_option("--max-denominator", max_denominator,
                     "denominator bound for rational ratio detection (default 64)");
  period->add_option("--ratio-tol", ratio_tol, "tolerance on ratio approximations (default 1e-9)");
  period->add_option("--verify-samples", verify_samples,
                     "sample count for the empirical recurrence check (default 128)");
  period->add_option("--verify-tol", verify_tol,
                     "tolerance for the empirical recurrence check (default 1e-7)");

  auto* verify = app.add_subcommand("verify", "Run a seeded invariant ensemble");
  verify->add_option("--suite", suite, "rows|norm|oracle|closedform")->required();
  verify->add_option("--seed", seed, "RNG seed recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      return run_simulate(config_path, engine_name, out_path, dump_path, as_printed);
    }
    if (compare->parsed()) {
      return run_compare(config_path, engines_arg, out_path, compare_tol, as_printed);
    }
    if (period->parsed()) {
      return run_period(config_path, max_denominator, ratio_tol, verify_samples, verify_tol);
    }
    if (verify->parsed()) {
      return run_verify(suite, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}
