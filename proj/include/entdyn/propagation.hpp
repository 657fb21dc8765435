#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entdyn/entanglement.hpp"

namespace entdyn {

// Uniform sample grid: steps+1 points t0 + j*(t1-t0)/steps, j = 0..steps.
struct TimeGrid {
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 1;

  TimeGrid() = default;
  TimeGrid(double t0_, double t1_, int steps_);

  double time(int j) const { return t0 + j * (t1 - t0) / steps; }
  std::vector<double> times() const;
};

enum class TrajectorySource { SuperOde, SchrodingerOracle, ClosedForm };

std::string to_string(TrajectorySource source);

struct ConcurrenceTrajectory {
  std::vector<double> times;
  std::vector<double> concurrence;
  std::optional<std::vector<SuperVector>> x_samples;
  TrajectorySource source = TrajectorySource::SuperOde;
};

// psi(t) = exp(i H t) psi0 for the Hamiltonian built from c. Note the
// dynamics convention here is psidot = +i H psi.
TwoQubitState evolve_state(const HamiltonianCoeffs& c, const TwoQubitState& psi0, double t);

// x(t) = exp(i A t) x0; the generator is Hermitian so the norm of x is
// conserved.
SuperVector evolve_x(const HamiltonianCoeffs& c, const SuperVector& x0, double t);

// Concurrence samples from the 10-dim linear dynamics: x0 = x_from_state(psi0),
// concurrence[j] = |x_1(t_j)|. With keep_x the full supervector samples are
// stored as well.
ConcurrenceTrajectory trajectory_super(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                       const TimeGrid& grid, bool keep_x);

// Concurrence samples straight from the 4-dim state evolution; the
// cross-check route for trajectory_super.
ConcurrenceTrajectory trajectory_oracle(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                        const TimeGrid& grid);

// Max pointwise concurrence difference. Throws GridMismatchError if the time
// samples differ anywhere by more than 1e-12.
double max_deviation(const ConcurrenceTrajectory& a, const ConcurrenceTrajectory& b);

}  // namespace entdyn
