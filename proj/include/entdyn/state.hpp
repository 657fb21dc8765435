#pragma once

#include <array>

#include "entdyn/complex_matrix.hpp"

namespace entdyn {

// Pure two-qubit state: four complex amplitudes in the |00>,|01>,|10>,|11>
// basis, qubit 1 the most significant factor. Equivalently eight real
// components psi_1..psi_8 with amplitude j = psi_{2j-1} + i psi_{2j}.
class TwoQubitState {
 public:
  TwoQubitState() { amplitudes_.fill(Complex{0.0, 0.0}); }
  explicit TwoQubitState(const std::array<Complex, 4>& amplitudes) : amplitudes_(amplitudes) {}

  static TwoQubitState basis(int index);  // 0..3 -> |00>,|01>,|10>,|11>
  static TwoQubitState bell_phi_plus();   // (|00> + |11>)/sqrt(2)
  static TwoQubitState bell_phi_minus();  // (|00> - |11>)/sqrt(2)
  static TwoQubitState bell_psi_plus();   // (|01> + |10>)/sqrt(2)
  static TwoQubitState bell_psi_minus();  // (|01> - |10>)/sqrt(2)

  const std::array<Complex, 4>& amplitudes() const { return amplitudes_; }
  Complex amplitude(int index) const { return amplitudes_.at(static_cast<std::size_t>(index)); }

  // psi_l, l in 1..8.
  double real_component(int l) const;

  double norm() const;
  TwoQubitState renormalized() const;

  // Throws NotNormalizedError if the norm deviates from 1 by more than tol.
  void require_normalized(double tol = 1e-8) const;

 private:
  std::array<Complex, 4> amplitudes_;
};

// (u1 (x) u2) psi for 2x2 unitaries u1, u2; throws NotUnitaryError when
// either factor deviates from unitarity by more than 1e-10.
TwoQubitState apply_local_unitary(const TwoQubitState& psi, const ComplexMatrix& u1,
                                  const ComplexMatrix& u2);

}  // namespace entdyn
