#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "entdyn/closed_form.hpp"
#include "entdyn/periodicity.hpp"
#include "entdyn/propagation.hpp"

namespace entdyn {

enum class HamiltonianKind { Coeffs, Josephson, Exchange, Xy, Ising };

// A Hamiltonian as specified in an experiment config: either raw
// coefficients or a named preset. The coefficient vector is always
// materialized; presets keep their parameters for closed-form and
// frequency-set dispatch.
struct HamiltonianSpec {
  HamiltonianKind kind = HamiltonianKind::Coeffs;
  HamiltonianCoeffs coeffs;
  std::optional<JosephsonParams> josephson;
  std::optional<ExchangeParams> exchange;
};

// Parsed experiment description. Parsing is fail-closed: unknown fields are
// rejected with the offending field named in the error message.
struct ExperimentConfig {
  HamiltonianSpec hamiltonian;
  TwoQubitState initial_state;
  std::string initial_state_preset;  // empty when amplitudes were given explicitly
  TimeGrid grid;
  bool out_concurrence = true;
  bool out_x_components = false;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load_file(const std::string& path);

  nlohmann::ordered_json to_json() const;
  std::string canonical_dump() const;
  std::uint64_t hash() const;
};

enum class Engine { Super, Oracle, Closed };

std::optional<Engine> parse_engine(const std::string& name);
std::string to_string(Engine engine);

// Which analytic route, if any, covers the given Hamiltonian.
enum class ClosedFormKind { None, Josephson, Exchange };

struct ClosedFormPlan {
  ClosedFormKind kind = ClosedFormKind::None;
  JosephsonParams josephson;
  ExchangeParams exchange;
};

ClosedFormPlan closed_form_plan(const HamiltonianSpec& spec);

// Frequency set driving the periodicity verdict, when one is defined for
// the Hamiltonian.
std::optional<FrequencySet> frequency_set(const HamiltonianSpec& spec);

// Samples one engine over the config grid. `as_printed` switches the closed
// engine to the verbatim XY/Ising reference formulas (xy/ising presets
// only). Throws CapabilityError when the engine cannot serve the request.
ConcurrenceTrajectory run_engine(const ExperimentConfig& cfg, Engine engine, bool as_printed);

// 17 significant digits; round-trips doubles exactly.
std::string format_double(double v);

std::string trajectory_csv(const ExperimentConfig& cfg, const ConcurrenceTrajectory& traj);

// Writes via a temp file in the target directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace entdyn
