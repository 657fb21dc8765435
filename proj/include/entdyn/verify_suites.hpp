#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace entdyn {

struct SuiteCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<SuiteCheck> checks;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

// Seeded invariant ensembles behind `entdyn verify`.
SuiteReport run_rows_suite(std::uint64_t seed);        // generator rows vs explicit expansion
SuiteReport run_norm_suite(std::uint64_t seed);        // supervector norm conservation
SuiteReport run_oracle_suite(std::uint64_t seed);      // 10-dim route vs state-evolution route
SuiteReport run_closedform_suite(std::uint64_t seed);  // analytic solutions vs the oracle

}  // namespace entdyn
