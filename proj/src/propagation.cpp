#include "entdyn/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "entdyn/errors.hpp"

namespace entdyn {

TimeGrid::TimeGrid(double t0_, double t1_, int steps_) : t0(t0_), t1(t1_), steps(steps_) {
  if (!(t1 > t0)) throw std::invalid_argument("TimeGrid: t1 must exceed t0");
  if (steps < 1) throw std::invalid_argument("TimeGrid: steps must be >= 1");
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> out(static_cast<std::size_t>(steps) + 1);
  for (int j = 0; j <= steps; ++j) out[static_cast<std::size_t>(j)] = time(j);
  return out;
}

std::string to_string(TrajectorySource source) {
  switch (source) {
    case TrajectorySource::SuperOde: return "super";
    case TrajectorySource::SchrodingerOracle: return "oracle";
    case TrajectorySource::ClosedForm: return "closed";
  }
  return "unknown";
}

TwoQubitState evolve_state(const HamiltonianCoeffs& c, const TwoQubitState& psi0, double t) {
  psi0.require_normalized();
  const ComplexMatrix u = unitary_propagator(build_hamiltonian(c), t);
  std::array<Complex, 4> out{};
  for (int r = 0; r < 4; ++r) {
    Complex s{0.0, 0.0};
    for (int col = 0; col < 4; ++col) s += u(r, col) * psi0.amplitude(col);
    out[static_cast<std::size_t>(r)] = s;
  }
  return TwoQubitState(out);
}

SuperVector evolve_x(const HamiltonianCoeffs& c, const SuperVector& x0, double t) {
  const ComplexMatrix u = unitary_propagator(build_A(c).generator, t);
  SuperVector out;
  for (int r = 0; r < 10; ++r) {
    Complex s{0.0, 0.0};
    for (int col = 0; col < 10; ++col) s += u(r, col) * x0.x[static_cast<std::size_t>(col)];
    out.x[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

namespace {

// Sampled propagation of v(t) = V diag(e^{i lambda t}) V^dag v0, decomposing
// the generator once for the whole grid.
class SampledPropagator {
 public:
  SampledPropagator(const ComplexMatrix& generator, std::span<const Complex> v0)
      : sd_(spectral_decompose(generator)), weights_(v0.size()), n_(generator.dim()) {
    // weights = V^dag v0
    for (int k = 0; k < n_; ++k) {
      Complex s{0.0, 0.0};
      for (int i = 0; i < n_; ++i) s += std::conj(sd_.eigenvectors(i, k)) * v0[static_cast<std::size_t>(i)];
      weights_[static_cast<std::size_t>(k)] = s;
    }
  }

  std::vector<Complex> at(double t) const {
    std::vector<Complex> out(static_cast<std::size_t>(n_), Complex{0.0, 0.0});
    for (int k = 0; k < n_; ++k) {
      const Complex wk =
          weights_[static_cast<std::size_t>(k)] *
          std::polar(1.0, sd_.eigenvalues[static_cast<std::size_t>(k)] * t);
      if (wk == Complex{0.0, 0.0}) continue;
      for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] += sd_.eigenvectors(i, k) * wk;
    }
    return out;
  }

 private:
  SpectralDecomposition sd_;
  std::vector<Complex> weights_;
  int n_;
};

}  // namespace

ConcurrenceTrajectory trajectory_super(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                       const TimeGrid& grid, bool keep_x) {
  const SuperVector x0 = x_from_state(psi0);
  const SampledPropagator prop(build_A(c).generator, std::span<const Complex>(x0.x));

  ConcurrenceTrajectory out;
  out.source = TrajectorySource::SuperOde;
  out.times = grid.times();
  out.concurrence.reserve(out.times.size());
  if (keep_x) out.x_samples.emplace();

  for (double t : out.times) {
    // Propagation is relative to the grid origin: x(t) = e^{iA(t-t0)} x(t0).
    const std::vector<Complex> xt = prop.at(t - grid.t0);
    out.concurrence.push_back(std::abs(xt[0]));
    if (keep_x) {
      SuperVector sv;
      std::copy(xt.begin(), xt.end(), sv.x.begin());
      out.x_samples->push_back(sv);
    }
  }
  return out;
}

ConcurrenceTrajectory trajectory_oracle(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                        const TimeGrid& grid) {
  psi0.require_normalized();
  const SampledPropagator prop(build_hamiltonian(c),
                               std::span<const Complex>(psi0.amplitudes()));

  ConcurrenceTrajectory out;
  out.source = TrajectorySource::SchrodingerOracle;
  out.times = grid.times();
  out.concurrence.reserve(out.times.size());
  for (double t : out.times) {
    const std::vector<Complex> amps = prop.at(t - grid.t0);
    out.concurrence.push_back(
        concurrence(TwoQubitState({amps[0], amps[1], amps[2], amps[3]})));
  }
  return out;
}

double max_deviation(const ConcurrenceTrajectory& a, const ConcurrenceTrajectory& b) {
  if (a.times.size() != b.times.size()) {
    throw GridMismatchError("max_deviation: trajectories have different sample counts");
  }
  for (std::size_t j = 0; j < a.times.size(); ++j) {
    if (std::abs(a.times[j] - b.times[j]) > 1e-12) {
      throw GridMismatchError("max_deviation: time samples differ at index " + std::to_string(j));
    }
  }
  double m = 0.0;
  for (std::size_t j = 0; j < a.concurrence.size(); ++j) {
    m = std::max(m, std::abs(a.concurrence[j] - b.concurrence[j]));
  }
  return m;
}

}  // namespace entdyn
