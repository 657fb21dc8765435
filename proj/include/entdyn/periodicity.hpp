#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "entdyn/closed_form.hpp"
#include "entdyn/propagation.hpp"

namespace entdyn {

enum class FrequencySource { Josephson, Exchange, Spectrum };

// Angular frequencies driving a concurrence evolution. Zero entries are kept
// but ignored by the commensurability test.
struct FrequencySet {
  std::vector<double> freqs;
  FrequencySource source = FrequencySource::Spectrum;
};

// {sqrt(1+alpha^2) E_J, alpha E_J}: half the angular frequencies of
// josephson_ent. Ratios, and hence periodicity verdicts, are
// normalization-independent, and the period classify derives from this set
// is a valid recurrence time of the dynamics (an even multiple of the
// fundamental). Throws DegenerateScaleError if E_L == 0.
FrequencySet josephson_freqs(const JosephsonParams& params);

// {a7, a11, a15}: the exchange evolution is periodic iff their pairwise
// ratios are rational, so these are the inputs to classify.
FrequencySet exchange_freqs(const ExchangeParams& params);

// Best rational approximation with bounded denominator (continued-fraction
// convergents plus the boundary semiconvergent).
struct RationalApprox {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value = 0.0;  // the input being approximated
  double error = 0.0;  // |value - num/den|
};

RationalApprox best_rational(double x, std::int64_t max_denominator);

enum class PeriodicityKind { Periodic, Aperiodic, Constant };

std::string to_string(PeriodicityKind kind);

// Aperiodic is a bounded-precision claim (no small-denominator rational fits
// within tol), not a proof of irrationality.
struct PeriodicityVerdict {
  PeriodicityKind kind = PeriodicityKind::Constant;
  std::optional<double> period;            // present iff Periodic
  std::vector<RationalApprox> witness;     // one approximation per nonzero frequency ratio
};

// Commensurability test: Constant when every frequency is zero (within tol);
// Periodic when each nonzero-frequency ratio against the largest one admits
// a rational p/q with q <= max_denominator within tol, with the period
// 2*pi over the implied gcd frequency; Aperiodic otherwise.
PeriodicityVerdict classify(const FrequencySet& fs, std::int64_t max_denominator = 64,
                            double tol = 1e-9);

// Empirical recurrence check: compares oracle concurrence at t and t+period
// over `samples`+1 points spanning one period.
bool verify_period(const HamiltonianCoeffs& c, const TwoQubitState& psi0, double period,
                   int samples, double tol);

}  // namespace entdyn
