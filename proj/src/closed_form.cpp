#include "entdyn/closed_form.hpp"

#include <cmath>

#include "entdyn/errors.hpp"

namespace entdyn {

JosephsonParams::JosephsonParams(double ej, double el) : E_J(ej), E_L(el) {
  if (el == 0.0) throw DegenerateScaleError("JosephsonParams: E_L must be nonzero");
}

HamiltonianCoeffs JosephsonParams::coeffs() const {
  if (E_L == 0.0) throw DegenerateScaleError("JosephsonParams: E_L must be nonzero");
  HamiltonianCoeffs c;
  c.at(1) = -E_J;
  c.at(4) = -E_J;
  c.at(11) = 2.0 * E_J * E_J / E_L;
  return c;
}

HamiltonianCoeffs ExchangeParams::coeffs() const {
  HamiltonianCoeffs c;
  c.at(7) = a7;
  c.at(11) = a11;
  c.at(15) = a15;
  return c;
}

// Solves the reduced dynamics of (x1, x2, x3, x4, x6, x8): the pairs
// x1 +/- x4 and x2 -/+ x3 close on themselves plus x6 + x8, giving one
// oscillation at 2*alpha*E_J and one at 2*sqrt(1+alpha^2)*E_J on top of a
// constant. Amplitudes depend on alpha only.
Complex josephson_ent(const JosephsonParams& params, const PQVector& pq, double t) {
  if (params.E_L == 0.0) throw DegenerateScaleError("josephson_ent: E_L must be nonzero");
  const double alpha = params.alpha();
  const double ej = params.E_J;
  const double root = std::sqrt(1.0 + alpha * alpha);
  const double fast = 2.0 * root * ej * t;   // |(a11, 2 a1)| = 2 sqrt(1+alpha^2) E_J
  const double slow = 2.0 * alpha * ej * t;  // a11 = 2 alpha E_J

  const double p1 = pq.p[0], p2 = pq.p[1], p3 = pq.p[2], p4 = pq.p[3];
  const double p6 = pq.p[5], p8 = pq.p[7];
  const double q1 = pq.q[0], q2 = pq.q[1], q3 = pq.q[2], q4 = pq.q[3];
  const double q6 = pq.q[5], q8 = pq.q[7];
  const double denom = 2.0 * (1.0 + alpha * alpha);

  const double r1 = (p1 - p4 + (q6 + q8) * alpha) / denom -
                    (q2 + q3) * alpha / (2.0 * root) * std::sin(fast) +
                    ((p1 - p4) * alpha - (q6 + q8)) / denom * alpha * std::cos(fast) +
                    (p1 + p4) / 2.0 * std::cos(slow) - (q2 - q3) / 2.0 * std::sin(slow);

  const double s1 = (q1 - q4 - (p6 + p8) * alpha) / denom +
                    (p2 + p3) * alpha / (2.0 * root) * std::sin(fast) +
                    ((q1 - q4) * alpha + (p6 + p8)) / denom * alpha * std::cos(fast) +
                    (q1 + q4) / 2.0 * std::cos(slow) + (p2 - p3) / 2.0 * std::sin(slow);

  return Complex{r1, s1};
}

Complex exchange_ent(const ExchangeParams& params, const PQVector& pq, double t) {
  const double c7 = std::cos(params.a7 * t), s7 = std::sin(params.a7 * t);
  const double c11 = std::cos(params.a11 * t), s11 = std::sin(params.a11 * t);
  const double c15 = std::cos(params.a15 * t), s15 = std::sin(params.a15 * t);

  const std::array<double, 8> r = {
      c7 * c11 * c15,  s7 * c11 * s15,  -s7 * s11 * c15, -c7 * s11 * s15,
      -s7 * s11 * s15, -c7 * s11 * c15, c7 * c11 * s15,  s7 * c11 * c15,
  };
  const std::array<double, 8> s = {
      s7 * s11 * s15,  c7 * s11 * c15,  -c7 * c11 * s15, -s7 * c11 * c15,
      c7 * c11 * c15,  s7 * c11 * s15,  -s7 * s11 * c15, -c7 * s11 * s15,
  };
  const std::array<double, 8> l = {pq.p[0], pq.p[1], pq.p[2], pq.p[3],
                                   pq.q[0], pq.q[1], pq.q[2], pq.q[3]};

  double rt = 0.0, st = 0.0;
  for (int i = 0; i < 8; ++i) {
    rt += r[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(i)];
    st += s[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(i)];
  }
  return Complex{rt, st};
}

std::array<double, 4> exchange_frequencies(const ExchangeParams& params) {
  return {params.a7 - params.a11 + params.a15, -params.a7 - params.a11 - params.a15,
          -params.a7 + params.a11 + params.a15, params.a7 + params.a11 - params.a15};
}

ComplexMatrix exchange_diagonalizer() {
  ComplexMatrix t(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t(r, c) = (r == c) ? -0.5 : 0.5;
  return t;
}

double xy_concurrence_sq(const PQVector& pq, double t) {
  const double p1 = pq.p[0], p2 = pq.p[1], p3 = pq.p[2], p4 = pq.p[3];
  const double q1 = pq.q[0], q2 = pq.q[1], q3 = pq.q[2], q4 = pq.q[3];
  const double s = std::sin(2.0 * t);
  const double c = std::cos(2.0 * t);
  const double u = (p2 - p4) * s + (q1 + q3) * c + q1 - q3;
  const double v = (q2 - q4) * s - (p1 + p3) * c - p1 + p3;
  return 0.25 * u * u + 0.25 * v * v;
}

double ising_concurrence(const PQVector& pq, double t) {
  const double p1 = pq.p[0], p4 = pq.p[3];
  const double q1 = pq.q[0], q4 = pq.q[3];
  const double u = p4 * std::sin(t) - q1 * std::cos(t);
  const double v = q4 * std::sin(t) + p1 * std::cos(t);
  return std::sqrt(u * u + v * v);
}

}  // namespace entdyn
