#pragma once

#include <array>

#include "entdyn/entanglement.hpp"

namespace entdyn {

// Charge-coupled Josephson junction pair: equal local sigma_x terms of
// strength -E_J/2 on both qubits plus a sigma_y^1 sigma_y^2 coupling of
// strength E_J^2/E_L. alpha = E_J/E_L controls the frequency content.
struct JosephsonParams {
  double E_J = 1.0;
  double E_L = 1.0;

  JosephsonParams() = default;
  JosephsonParams(double ej, double el);  // throws DegenerateScaleError if el == 0

  double alpha() const { return E_J / E_L; }
  HamiltonianCoeffs coeffs() const;  // a1 = a4 = -E_J, a11 = 2 E_J^2 / E_L
};

// Pure exchange coupling: the three diagonal coupling coefficients with all
// local terms zero. The x_1..x_4 dynamics then decouples from x_5..x_10.
struct ExchangeParams {
  double a7 = 0.0;
  double a11 = 0.0;
  double a15 = 0.0;

  HamiltonianCoeffs coeffs() const;
};

// Analytic x_1(t) for the Josephson Hamiltonian: two oscillations at
// 2*sqrt(1+alpha^2)*E_J and 2*alpha*E_J plus a constant term. Reduces to
// p1 + i q1 at t = 0.
Complex josephson_ent(const JosephsonParams& params, const PQVector& pq, double t);

// Analytic x_1(t) = (r(t) + i s(t)) . l for a pure exchange Hamiltonian,
// where l = [p1..p4, q1..q4] and r, s collect the eight signed triple
// products of cos/sin(a7 t), cos/sin(a11 t), cos/sin(a15 t).
Complex exchange_ent(const ExchangeParams& params, const PQVector& pq, double t);

// Diagonal of the transformed upper generator block, in the fixed order
// (a7 - a11 + a15, -a7 - a11 - a15, -a7 + a11 + a15, a7 + a11 - a15).
std::array<double, 4> exchange_frequencies(const ExchangeParams& params);

// The involutory +-1/2 matrix that diagonalizes the upper 4x4 generator
// block; columns are eigenvectors matching exchange_frequencies order.
ComplexMatrix exchange_diagonalizer();

// Specialized squared concurrence for the XY Hamiltonian
// sigma_x sigma_x + sigma_y sigma_y, oscillating at argument 2t. Equivalent
// to |exchange_ent|^2 at a7 = a11 = 1, a unit-coupling normalization that
// differs by a factor 2 from the coefficient extraction used elsewhere in
// this library; kept as a reference variant behind --as-printed-formula.
double xy_concurrence_sq(const PQVector& pq, double t);

// Specialized concurrence for the Ising Hamiltonian sigma_x sigma_x,
// oscillating at argument t. Equivalent to |exchange_ent| at a7 = 1; same
// normalization caveat as xy_concurrence_sq.
double ising_concurrence(const PQVector& pq, double t);

}  // namespace entdyn
