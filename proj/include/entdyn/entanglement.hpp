#pragma once

#include <array>

#include "entdyn/complex_matrix.hpp"
#include "entdyn/hamiltonian.hpp"
#include "entdyn/state.hpp"

namespace entdyn {

// The ten bilinears x_k = psi^T P_k psi (plain transpose, not the inner
// product). x_1 is the entanglement form whose magnitude is the concurrence.
struct SuperVector {
  std::array<Complex, 10> x{};

  Complex at(int k) const { return x.at(static_cast<std::size_t>(k - 1)); }  // 1-based
  double norm() const;
};

// Real and imaginary parts of the supervector, p_k + i q_k = x_k, evaluated
// from the eight real state components via explicit quadratic formulas.
struct PQVector {
  std::array<double, 10> p{};
  std::array<double, 10> q{};
};

// The fixed operator basis [P_1..P_10]:
//   P1 = sy(x)sy, P2 = I, P3 = sx(x)sx, P4 = sz(x)sz, P5 = i sz^1,
//   P6 = i sx^2, P7 = sx(x)sz, P8 = i sx^1, P9 = sz(x)sx, P10 = i sz^2.
const std::array<ComplexMatrix, 10>& p_matrices();

// Bilinear form psi^T m psi.
Complex bilinear(const TwoQubitState& psi, const ComplexMatrix& m);

// Requires psi normalized within 1e-8.
SuperVector x_from_state(const TwoQubitState& psi);

// C(psi) = |psi^T (sy (x) sy) psi| = |x_1|; 0 for product states, 1 for
// maximally entangled ones. Requires psi normalized within 1e-8.
double concurrence(const TwoQubitState& psi);

// Hermitian generator of the supervector dynamics xdot = i A x, together
// with the coefficients it was built from. Every entry is +/-a_k, +/-i a_k,
// or zero.
struct AMatrix {
  ComplexMatrix generator;
  HamiltonianCoeffs coeffs;
};

AMatrix build_A(const HamiltonianCoeffs& c);

// Independent check of one generator row: builds H^T P_k + P_k H explicitly
// from 4x4 products and compares it to sum_j A[k][j] P_j entrywise.
bool verify_row_identity(const HamiltonianCoeffs& c, int k, double tol);

// Requires psi normalized within 1e-8. Satisfies p_k + i q_k = x_k and
// sum_k (p_k^2 + q_k^2) = 4.
PQVector pq_from_state(const TwoQubitState& psi);

}  // namespace entdyn
