#include "entdyn/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "entdyn/errors.hpp"

namespace entdyn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
}

// Fail-closed key validation: every key must be either required or optional,
// and all required keys must be present.
void check_keys(const json& j, const std::string& ctx, const std::set<std::string>& required,
                const std::set<std::string>& optional = {}) {
  require_object(j, ctx);
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw ConfigError(ctx + ": unknown field '" + key + "'");
    }
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) throw ConfigError(ctx + ": missing field '" + key + "'");
  }
}

double get_number(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ConfigError(ctx + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(ctx + ": must be finite");
  return v;
}

HamiltonianSpec parse_hamiltonian(const json& j) {
  require_object(j, "hamiltonian");
  if (j.size() != 1) {
    throw ConfigError("hamiltonian: exactly one variant expected (coeffs, josephson, exchange, "
                      "xy, or ising)");
  }
  HamiltonianSpec spec;
  const auto it = j.begin();
  const std::string key = it.key();
  const json& body = it.value();
  if (key == "coeffs") {
    if (!body.is_array() || body.size() != 15) {
      throw ConfigError("hamiltonian.coeffs: expected an array of 15 numbers");
    }
    spec.kind = HamiltonianKind::Coeffs;
    for (int k = 1; k <= 15; ++k) {
      spec.coeffs.at(k) =
          get_number(body[static_cast<std::size_t>(k - 1)], "hamiltonian.coeffs[" + std::to_string(k - 1) + "]");
    }
  } else if (key == "josephson") {
    check_keys(body, "hamiltonian.josephson", {"E_J", "E_L"});
    const double ej = get_number(body["E_J"], "hamiltonian.josephson.E_J");
    const double el = get_number(body["E_L"], "hamiltonian.josephson.E_L");
    if (el == 0.0) throw ConfigError("hamiltonian.josephson.E_L: must be nonzero");
    spec.kind = HamiltonianKind::Josephson;
    spec.josephson = JosephsonParams(ej, el);
    spec.coeffs = spec.josephson->coeffs();
  } else if (key == "exchange") {
    check_keys(body, "hamiltonian.exchange", {"a7", "a11", "a15"});
    spec.kind = HamiltonianKind::Exchange;
    spec.exchange = ExchangeParams{get_number(body["a7"], "hamiltonian.exchange.a7"),
                                   get_number(body["a11"], "hamiltonian.exchange.a11"),
                                   get_number(body["a15"], "hamiltonian.exchange.a15")};
    spec.coeffs = spec.exchange->coeffs();
  } else if (key == "xy" || key == "ising") {
    if (!body.is_null() && !(body.is_object() && body.empty())) {
      throw ConfigError("hamiltonian." + key + ": takes no parameters");
    }
    // Coefficient extraction from H3 = sx sx + sy sy and H4 = sx sx: each
    // bare Pauli product carries coefficient 2 in the a_k/2 parameterization.
    if (key == "xy") {
      spec.kind = HamiltonianKind::Xy;
      spec.exchange = ExchangeParams{2.0, 2.0, 0.0};
    } else {
      spec.kind = HamiltonianKind::Ising;
      spec.exchange = ExchangeParams{2.0, 0.0, 0.0};
    }
    spec.coeffs = spec.exchange->coeffs();
  } else {
    throw ConfigError("hamiltonian: unknown field '" + key + "'");
  }
  return spec;
}

const std::set<std::string> kStatePresets = {"basis00", "basis01", "basis10", "basis11",
                                             "bell_phi_plus"};

TwoQubitState preset_state(const std::string& name) {
  if (name == "basis00") return TwoQubitState::basis(0);
  if (name == "basis01") return TwoQubitState::basis(1);
  if (name == "basis10") return TwoQubitState::basis(2);
  if (name == "basis11") return TwoQubitState::basis(3);
  return TwoQubitState::bell_phi_plus();
}

std::pair<TwoQubitState, std::string> parse_initial_state(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (!kStatePresets.contains(name)) {
      throw ConfigError("initial_state: unknown preset '" + name + "'");
    }
    return {preset_state(name), name};
  }
  check_keys(j, "initial_state", {"re", "im"});
  const json& re = j["re"];
  const json& im = j["im"];
  if (!re.is_array() || re.size() != 4) {
    throw ConfigError("initial_state.re: expected an array of 4 numbers");
  }
  if (!im.is_array() || im.size() != 4) {
    throw ConfigError("initial_state.im: expected an array of 4 numbers");
  }
  std::array<Complex, 4> amps;
  for (std::size_t i = 0; i < 4; ++i) {
    amps[i] = Complex{get_number(re[i], "initial_state.re[" + std::to_string(i) + "]"),
                      get_number(im[i], "initial_state.im[" + std::to_string(i) + "]")};
  }
  TwoQubitState state(amps);
  if (std::abs(state.norm() - 1.0) > 1e-6) {
    throw ConfigError("initial_state: norm " + std::to_string(state.norm()) +
                      " deviates from 1 beyond 1e-6");
  }
  // Exact renormalization for decimal-rounded inputs; skip when already at
  // working precision so canonical dumps are idempotent.
  if (std::abs(state.norm() - 1.0) > 1e-12) state = state.renormalized();
  return {state, std::string()};
}

TimeGrid parse_grid(const json& j) {
  check_keys(j, "grid", {"t0", "t1", "steps"});
  const double t0 = get_number(j["t0"], "grid.t0");
  const double t1 = get_number(j["t1"], "grid.t1");
  if (!j["steps"].is_number_integer()) throw ConfigError("grid.steps: expected an integer");
  const std::int64_t steps = j["steps"].get<std::int64_t>();
  if (steps < 1 || steps > 10'000'000) throw ConfigError("grid.steps: must be in 1..10000000");
  if (!(t1 > t0)) throw ConfigError("grid.t1: must exceed grid.t0");
  return TimeGrid(t0, t1, static_cast<int>(steps));
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  check_keys(j, "config", {"hamiltonian", "initial_state", "grid"}, {"outputs"});
  ExperimentConfig cfg;
  cfg.hamiltonian = parse_hamiltonian(j.at("hamiltonian"));
  std::tie(cfg.initial_state, cfg.initial_state_preset) = parse_initial_state(j.at("initial_state"));
  cfg.grid = parse_grid(j.at("grid"));
  if (j.contains("outputs")) {
    const json& outputs = j.at("outputs");
    check_keys(outputs, "outputs", {}, {"concurrence", "x_components"});
    if (outputs.contains("concurrence")) {
      if (!outputs["concurrence"].is_boolean()) {
        throw ConfigError("outputs.concurrence: expected a boolean");
      }
      cfg.out_concurrence = outputs["concurrence"].get<bool>();
      if (!cfg.out_concurrence) {
        throw ConfigError("outputs.concurrence: the concurrence column is mandatory");
      }
    }
    if (outputs.contains("x_components")) {
      if (!outputs["x_components"].is_boolean()) {
        throw ConfigError("outputs.x_components: expected a boolean");
      }
      cfg.out_x_components = outputs["x_components"].get<bool>();
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file '" + path + "' cannot be opened");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

ordered_json ExperimentConfig::to_json() const {
  ordered_json j;
  ordered_json ham;
  switch (hamiltonian.kind) {
    case HamiltonianKind::Coeffs: {
      ham["coeffs"] = hamiltonian.coeffs.values();
      break;
    }
    case HamiltonianKind::Josephson:
      ham["josephson"] = {{"E_J", hamiltonian.josephson->E_J}, {"E_L", hamiltonian.josephson->E_L}};
      break;
    case HamiltonianKind::Exchange:
      ham["exchange"] = {{"a7", hamiltonian.exchange->a7},
                         {"a11", hamiltonian.exchange->a11},
                         {"a15", hamiltonian.exchange->a15}};
      break;
    case HamiltonianKind::Xy:
      ham["xy"] = ordered_json::object();
      break;
    case HamiltonianKind::Ising:
      ham["ising"] = ordered_json::object();
      break;
  }
  j["hamiltonian"] = ham;
  if (!initial_state_preset.empty()) {
    j["initial_state"] = initial_state_preset;
  } else {
    std::array<double, 4> re{}, im{};
    for (std::size_t i = 0; i < 4; ++i) {
      re[i] = initial_state.amplitude(static_cast<int>(i)).real();
      im[i] = initial_state.amplitude(static_cast<int>(i)).imag();
    }
    j["initial_state"] = {{"re", re}, {"im", im}};
  }
  j["grid"] = {{"t0", grid.t0}, {"t1", grid.t1}, {"steps", grid.steps}};
  j["outputs"] = {{"concurrence", out_concurrence}, {"x_components", out_x_components}};
  return j;
}

std::string ExperimentConfig::canonical_dump() const { return to_json().dump(2) + "\n"; }

std::uint64_t ExperimentConfig::hash() const {
  const std::string s = canonical_dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<Engine> parse_engine(const std::string& name) {
  if (name == "super") return Engine::Super;
  if (name == "oracle") return Engine::Oracle;
  if (name == "closed") return Engine::Closed;
  return std::nullopt;
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Super: return "super";
    case Engine::Oracle: return "oracle";
    case Engine::Closed: return "closed";
  }
  return "unknown";
}

ClosedFormPlan closed_form_plan(const HamiltonianSpec& spec) {
  ClosedFormPlan plan;
  switch (spec.kind) {
    case HamiltonianKind::Josephson:
      plan.kind = ClosedFormKind::Josephson;
      plan.josephson = *spec.josephson;
      return plan;
    case HamiltonianKind::Exchange:
    case HamiltonianKind::Xy:
    case HamiltonianKind::Ising:
      plan.kind = ClosedFormKind::Exchange;
      plan.exchange = *spec.exchange;
      return plan;
    case HamiltonianKind::Coeffs:
      break;
  }
  const HamiltonianCoeffs& c = spec.coeffs;
  bool local_free = true;
  for (int k = 1; k <= 6; ++k) local_free = local_free && c.at(k) == 0.0;
  if (local_free && coupling_form(c) != CouplingForm::GeneralCoupling) {
    plan.kind = ClosedFormKind::Exchange;
    plan.exchange = ExchangeParams{c.at(7), c.at(11), c.at(15)};
    return plan;
  }
  // Josephson pattern: equal sigma_x locals on both qubits, a single
  // sigma_y sigma_y coupling, nothing else.
  const bool josephson_locals = c.at(1) != 0.0 && c.at(1) == c.at(4) && c.at(2) == 0.0 &&
                                c.at(3) == 0.0 && c.at(5) == 0.0 && c.at(6) == 0.0;
  bool only_a11_coupling = c.at(11) != 0.0;
  for (int k = 7; k <= 15; ++k) {
    if (k != 11 && c.at(k) != 0.0) only_a11_coupling = false;
  }
  if (josephson_locals && only_a11_coupling) {
    const double ej = -c.at(1);
    const double el = 2.0 * ej * ej / c.at(11);
    plan.kind = ClosedFormKind::Josephson;
    plan.josephson = JosephsonParams(ej, el);
    return plan;
  }
  return plan;
}

std::optional<FrequencySet> frequency_set(const HamiltonianSpec& spec) {
  const ClosedFormPlan plan = closed_form_plan(spec);
  switch (plan.kind) {
    case ClosedFormKind::Josephson: return josephson_freqs(plan.josephson);
    case ClosedFormKind::Exchange: return exchange_freqs(plan.exchange);
    case ClosedFormKind::None: return std::nullopt;
  }
  return std::nullopt;
}

ConcurrenceTrajectory run_engine(const ExperimentConfig& cfg, Engine engine, bool as_printed) {
  switch (engine) {
    case Engine::Super:
      return trajectory_super(cfg.hamiltonian.coeffs, cfg.initial_state, cfg.grid,
                              cfg.out_x_components);
    case Engine::Oracle:
      if (cfg.out_x_components) {
        throw CapabilityError("engine 'oracle' does not produce x components; use engine 'super'");
      }
      return trajectory_oracle(cfg.hamiltonian.coeffs, cfg.initial_state, cfg.grid);
    case Engine::Closed:
      break;
  }
  if (cfg.out_x_components) {
    throw CapabilityError("engine 'closed' does not produce x components; use engine 'super'");
  }

  const PQVector pq = pq_from_state(cfg.initial_state);
  ConcurrenceTrajectory out;
  out.source = TrajectorySource::ClosedForm;
  out.times = cfg.grid.times();
  out.concurrence.reserve(out.times.size());

  if (as_printed) {
    if (cfg.hamiltonian.kind == HamiltonianKind::Xy) {
      for (double t : out.times) {
        out.concurrence.push_back(std::sqrt(std::max(0.0, xy_concurrence_sq(pq, t - cfg.grid.t0))));
      }
      return out;
    }
    if (cfg.hamiltonian.kind == HamiltonianKind::Ising) {
      for (double t : out.times) out.concurrence.push_back(ising_concurrence(pq, t - cfg.grid.t0));
      return out;
    }
    throw CapabilityError("--as-printed-formula applies only to the xy and ising presets");
  }

  const ClosedFormPlan plan = closed_form_plan(cfg.hamiltonian);
  switch (plan.kind) {
    case ClosedFormKind::Josephson:
      for (double t : out.times) {
        out.concurrence.push_back(std::abs(josephson_ent(plan.josephson, pq, t - cfg.grid.t0)));
      }
      return out;
    case ClosedFormKind::Exchange:
      for (double t : out.times) {
        out.concurrence.push_back(std::abs(exchange_ent(plan.exchange, pq, t - cfg.grid.t0)));
      }
      return out;
    case ClosedFormKind::None:
      break;
  }
  throw CapabilityError(
      "engine 'closed' has no analytic form for this Hamiltonian (needs a pure diagonal "
      "exchange or the Josephson pattern)");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trajectory_csv(const ExperimentConfig& cfg, const ConcurrenceTrajectory& traj) {
  std::ostringstream out;
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof hash_buf, "%016llx",
                static_cast<unsigned long long>(cfg.hash()));
  out << "# config_hash=" << hash_buf << "\n";
  out << "# source=" << to_string(traj.source) << "\n";
  out << "t,concurrence";
  const bool with_x = traj.x_samples.has_value();
  if (with_x) {
    for (int k = 1; k <= 10; ++k) out << ",re_x" << k << ",im_x" << k;
  }
  out << "\n";
  for (std::size_t j = 0; j < traj.times.size(); ++j) {
    out << format_double(traj.times[j]) << "," << format_double(traj.concurrence[j]);
    if (with_x) {
      const SuperVector& x = (*traj.x_samples)[j];
      for (int k = 0; k < 10; ++k) {
        out << "," << format_double(x.x[static_cast<std::size_t>(k)].real()) << ","
            << format_double(x.x[static_cast<std::size_t>(k)].imag());
      }
    }
    out << "\n";
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

}  // namespace entdyn
