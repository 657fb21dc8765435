#pragma once

#include <array>

#include "entdyn/complex_matrix.hpp"
#include "entdyn/pauli.hpp"

namespace entdyn {

// The 15 real coefficients of a general two-qubit Hamiltonian
//   H = sum_k (a_k / 2) * B_k,
// where B_1..B_6 are the local operators sigma_x^1, sigma_y^1, sigma_z^1,
// sigma_x^2, sigma_y^2, sigma_z^2 and B_7..B_15 the couplings
// sigma_alpha^1 sigma_beta^2 in (xx, xy, xz, yx, yy, yz, zx, zy, zz) order.
// Indexing is 1-based at the API surface.
class HamiltonianCoeffs {
 public:
  HamiltonianCoeffs() { values_.fill(0.0); }
  explicit HamiltonianCoeffs(const std::array<double, 15>& a_1_to_15) : values_(a_1_to_15) {}

  double at(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
  double& at(int k) { return values_.at(static_cast<std::size_t>(k - 1)); }

  const std::array<double, 15>& values() const { return values_; }

  friend bool operator==(const HamiltonianCoeffs&, const HamiltonianCoeffs&) = default;

 private:
  std::array<double, 15> values_;
};

// Basis operator B_k for a coefficient slot, k in 1..15.
const ComplexMatrix& coefficient_basis_matrix(int k);

// H = sum_k (a_k / 2) B_k. Hermitian and traceless for any real coefficients.
ComplexMatrix build_hamiltonian(const HamiltonianCoeffs& c);

// Coupling structure of the coefficient vector.
enum class CouplingForm {
  LocalOnly,         // a7..a15 all zero
  DiagonalCoupling,  // among a7..a15 only a7, a11, a15 may be nonzero
  GeneralCoupling,   // some cross coupling present
};

CouplingForm coupling_form(const HamiltonianCoeffs& c);

}  // namespace entdyn
