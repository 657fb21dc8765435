#include "entdyn/verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "entdyn/closed_form.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/propagation.hpp"

namespace entdyn {

namespace {

HamiltonianCoeffs random_coeffs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  HamiltonianCoeffs c;
  for (int k = 1; k <= 15; ++k) c.at(k) = dist(rng);
  return c;
}

TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 4> amps;
  for (auto& a : amps) a = Complex{gauss(rng), gauss(rng)};
  return TwoQubitState(amps).renormalized();
}

// Max-abs residual of the expansion H^T P_k + P_k H = sum_j A[k][j] P_j.
double row_residual(const HamiltonianCoeffs& c, int k) {
  const ComplexMatrix h = build_hamiltonian(c);
  const auto& basis = p_matrices();
  const ComplexMatrix& pk = basis[static_cast<std::size_t>(k - 1)];
  const ComplexMatrix lhs = h.transpose() * pk + pk * h;
  const AMatrix a = build_A(c);
  ComplexMatrix rhs(4);
  for (int j = 0; j < 10; ++j) {
    const Complex akj = a.generator(k - 1, j);
    if (akj == Complex{0.0, 0.0}) continue;
    rhs = rhs + akj * basis[static_cast<std::size_t>(j)];
  }
  return max_abs_diff(lhs, rhs);
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs_diff(m, m.adjoint());
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = cases;
  j["checks"] = nlohmann::ordered_json::array();
  for (const SuiteCheck& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["pass"] = pass();
  return j;
}

SuiteReport run_rows_suite(std::uint64_t seed) {
  SuiteReport report{"rows", seed, 200, {}};
  std::mt19937_64 rng(seed);
  double max_row = 0.0;
  double max_herm = 0.0;
  for (int n = 0; n < report.cases; ++n) {
    const HamiltonianCoeffs c = random_coeffs(rng);
    for (int k = 1; k <= 10; ++k) max_row = std::max(max_row, row_residual(c, k));
    max_herm = std::max(max_herm, hermiticity_residual(build_A(c).generator));
  }
  report.checks.push_back({"row_expansion", max_row, 1e-12, max_row <= 1e-12});
  report.checks.push_back({"generator_hermiticity", max_herm, 1e-13, max_herm <= 1e-13});
  return report;
}

SuiteReport run_norm_suite(std::uint64_t seed) {
  SuiteReport report{"norm", seed, 100, {}};
  std::mt19937_64 rng(seed);
  double max_dev = 0.0;
  for (int n = 0; n < report.cases; ++n) {
    const HamiltonianCoeffs c = random_coeffs(rng);
    const TwoQubitState psi0 = random_state(rng);
    const ConcurrenceTrajectory traj =
        trajectory_super(c, psi0, TimeGrid(0.0, 50.0, 99), /*keep_x=*/true);
    for (const SuperVector& x : *traj.x_samples) {
      max_dev = std::max(max_dev, std::abs(x.norm() - 2.0));
    }
  }
  report.checks.push_back({"supersphere_radius", max_dev, 1e-9, max_dev <= 1e-9});
  return report;
}

SuiteReport run_oracle_suite(std::uint64_t seed) {
  SuiteReport report{"oracle", seed, 50, {}};
  std::mt19937_64 rng(seed);
  double max_dev = 0.0;
  const TimeGrid grid(0.0, 10.0, 200);
  for (int n = 0; n < report.cases; ++n) {
    const HamiltonianCoeffs c = random_coeffs(rng);
    const TwoQubitState psi0 = random_state(rng);
    const ConcurrenceTrajectory super = trajectory_super(c, psi0, grid, false);
    const ConcurrenceTrajectory oracle = trajectory_oracle(c, psi0, grid);
    max_dev = std::max(max_dev, max_deviation(super, oracle));
  }
  report.checks.push_back({"super_vs_oracle", max_dev, 1e-9, max_dev <= 1e-9});
  return report;
}

SuiteReport run_closedform_suite(std::uint64_t seed) {
  SuiteReport report{"closedform", seed, 0, {}};
  std::mt19937_64 rng(seed);

  // Josephson solutions against the oracle for a spread of alpha values.
  double max_josephson = 0.0;
  {
    const TimeGrid grid(0.0, 20.0, 200);
    const std::array<double, 4> alphas = {0.5, 0.75, 1.0, 2.0};
    const std::array<TwoQubitState, 3> states = {TwoQubitState::basis(0),
                                                 TwoQubitState::bell_phi_plus(),
                                                 random_state(rng)};
    for (double alpha : alphas) {
      const JosephsonParams params(1.0, 1.0 / alpha);
      for (const TwoQubitState& psi0 : states) {
        const PQVector pq = pq_from_state(psi0);
        const ConcurrenceTrajectory oracle = trajectory_oracle(params.coeffs(), psi0, grid);
        for (std::size_t j = 0; j < oracle.times.size(); ++j) {
          const double closed = std::abs(josephson_ent(params, pq, oracle.times[j]));
          max_josephson = std::max(max_josephson, std::abs(closed - oracle.concurrence[j]));
        }
        ++report.cases;
      }
    }
  }
  report.checks.push_back({"josephson_vs_oracle", max_josephson, 1e-8, max_josephson <= 1e-8});

  // Exchange solutions against the 10-dim route, x_1 compared as a complex value.
  double max_exchange = 0.0;
  {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const TimeGrid grid(0.0, 10.0, 200);
    for (int n = 0; n < 20; ++n) {
      const ExchangeParams params{dist(rng), dist(rng), dist(rng)};
      const TwoQubitState psi0 = random_state(rng);
      const PQVector pq = pq_from_state(psi0);
      const ConcurrenceTrajectory super =
          trajectory_super(params.coeffs(), psi0, grid, /*keep_x=*/true);
      for (std::size_t j = 0; j < super.times.size(); ++j) {
        const Complex closed = exchange_ent(params, pq, super.times[j]);
        max_exchange = std::max(max_exchange, std::abs(closed - (*super.x_samples)[j].x[0]));
      }
      ++report.cases;
    }
  }
  report.checks.push_back({"exchange_vs_super_x1", max_exchange, 1e-9, max_exchange <= 1e-9});
  return report;
}

}  // namespace entdyn
