#include "entdyn/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "entdyn/errors.hpp"

namespace entdyn {

FrequencySet josephson_freqs(const JosephsonParams& params) {
  if (params.E_L == 0.0) throw DegenerateScaleError("josephson_freqs: E_L must be nonzero");
  const double alpha = params.alpha();
  return {{std::sqrt(1.0 + alpha * alpha) * params.E_J, alpha * params.E_J},
          FrequencySource::Josephson};
}

FrequencySet exchange_freqs(const ExchangeParams& params) {
  return {{params.a7, params.a11, params.a15}, FrequencySource::Exchange};
}

RationalApprox best_rational(double x, std::int64_t max_denominator) {
  if (max_denominator < 1) {
    throw std::invalid_argument("best_rational: max_denominator must be >= 1");
  }
  if (!std::isfinite(x)) throw std::invalid_argument("best_rational: input must be finite");

  const double ax = std::abs(x);
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double y = ax;
  for (int iter = 0; iter < 64; ++iter) {
    const double floor_y = std::floor(y);
    if (floor_y > 9.0e15) break;  // effectively exact already
    const std::int64_t a = static_cast<std::int64_t>(floor_y);
    if (q1 != 0 && a > (max_denominator - q0) / q1 + 1) break;
    const std::int64_t q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    const std::int64_t p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = y - floor_y;
    if (frac < 1e-15 * std::max(1.0, floor_y)) {
      RationalApprox exact{x < 0 ? -p1 : p1, q1, x, std::abs(ax - double(p1) / double(q1))};
      return exact;
    }
    y = 1.0 / frac;
  }

  // Convergent p1/q1 vs the boundary semiconvergent built on top of it.
  const std::int64_t k = q1 > 0 ? (max_denominator - q0) / q1 : 0;
  const std::int64_t ps = p0 + k * p1;
  const std::int64_t qs = q0 + k * q1;
  const double err_conv = q1 > 0 ? std::abs(ax - double(p1) / double(q1)) : HUGE_VAL;
  const double err_semi = qs > 0 ? std::abs(ax - double(ps) / double(qs)) : HUGE_VAL;

  RationalApprox out;
  if (err_semi < err_conv) {
    out.num = ps;
    out.den = qs;
    out.error = err_semi;
  } else {
    out.num = p1;
    out.den = q1;
    out.error = err_conv;
  }
  if (x < 0) out.num = -out.num;
  out.value = x;
  return out;
}

std::string to_string(PeriodicityKind kind) {
  switch (kind) {
    case PeriodicityKind::Periodic: return "periodic";
    case PeriodicityKind::Aperiodic: return "aperiodic";
    case PeriodicityKind::Constant: return "constant";
  }
  return "unknown";
}

PeriodicityVerdict classify(const FrequencySet& fs, std::int64_t max_denominator, double tol) {
  if (max_denominator < 1) {
    throw std::invalid_argument("classify: max_denominator must be >= 1");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");

  std::vector<double> nonzero;
  for (double f : fs.freqs) {
    if (std::abs(f) > tol) nonzero.push_back(std::abs(f));
  }
  PeriodicityVerdict verdict;
  if (nonzero.empty()) {
    verdict.kind = PeriodicityKind::Constant;
    return verdict;
  }

  const double f_ref = *std::max_element(nonzero.begin(), nonzero.end());
  bool all_rational = true;
  std::vector<RationalApprox> approx;
  approx.reserve(nonzero.size());
  for (double f : nonzero) {
    RationalApprox r = best_rational(f / f_ref, max_denominator);
    if (r.error > tol || r.num == 0) all_rational = false;
    approx.push_back(r);
  }
  verdict.witness = approx;
  if (!all_rational) {
    verdict.kind = PeriodicityKind::Aperiodic;
    return verdict;
  }

  // Common lattice: f_i ~= (p_i/q_i) f_ref, so every frequency is an integer
  // multiple n_i = p_i * (L/q_i) of g = f_ref / L with L = lcm(q_i). The gcd
  // of the n_i then fixes the fundamental frequency.
  std::int64_t lcm_q = 1;
  for (const RationalApprox& r : approx) {
    lcm_q = std::lcm(lcm_q, r.den);
    if (lcm_q > (std::int64_t{1} << 40)) {  // ratios this wild are not credible periods
      verdict.kind = PeriodicityKind::Aperiodic;
      return verdict;
    }
  }
  std::int64_t gcd_n = 0;
  for (const RationalApprox& r : approx) {
    const std::int64_t n = r.num * (lcm_q / r.den);
    gcd_n = std::gcd(gcd_n, n);
  }
  const double fundamental = f_ref * static_cast<double>(gcd_n) / static_cast<double>(lcm_q);
  verdict.kind = PeriodicityKind::Periodic;
  verdict.period = 2.0 * std::numbers::pi / fundamental;
  return verdict;
}

bool verify_period(const HamiltonianCoeffs& c, const TwoQubitState& psi0, double period,
                   int samples, double tol) {
  if (!(period > 0.0)) throw std::invalid_argument("verify_period: period must be positive");
  if (samples < 1) throw std::invalid_argument("verify_period: samples must be >= 1");
  // C(t_j + period) is sampled by evolving psi0 through one period first,
  // then sweeping the same grid from the advanced state.
  const TwoQubitState advanced = evolve_state(c, psi0, period);
  const TimeGrid grid(0.0, period, samples);
  const ConcurrenceTrajectory base = trajectory_oracle(c, psi0, grid);
  const ConcurrenceTrajectory shifted = trajectory_oracle(c, advanced, grid);
  for (std::size_t j = 0; j < base.concurrence.size(); ++j) {
    if (std::abs(base.concurrence[j] - shifted.concurrence[j]) > tol) return false;
  }
  return true;
}

}  // namespace entdyn
