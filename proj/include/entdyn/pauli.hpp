#pragma once

#include "entdyn/complex_matrix.hpp"

namespace entdyn {

// Single-qubit operator label: identity or a Pauli axis.
enum class PauliAxis { I = 0, X = 1, Y = 2, Z = 3 };

// The 2x2 matrix for one axis.
const ComplexMatrix& pauli_matrix(PauliAxis axis);

// Tensor product with the first factor on qubit 1 (the left / most
// significant slot in the |00>,|01>,|10>,|11> basis ordering).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// The sixteen two-qubit operators sigma_alpha^1 sigma_beta^2 = sigma_alpha
// (x) sigma_beta, cached and keyed by axis pair.
const ComplexMatrix& pauli_tensor(PauliAxis alpha, PauliAxis beta);

}  // namespace entdyn
