#include "entdyn/hamiltonian.hpp"

#include <stdexcept>
#include <string>

namespace entdyn {

namespace {

constexpr std::array<std::pair<PauliAxis, PauliAxis>, 15> kBasisOrder = {{
    {PauliAxis::X, PauliAxis::I}, {PauliAxis::Y, PauliAxis::I}, {PauliAxis::Z, PauliAxis::I},
    {PauliAxis::I, PauliAxis::X}, {PauliAxis::I, PauliAxis::Y}, {PauliAxis::I, PauliAxis::Z},
    {PauliAxis::X, PauliAxis::X}, {PauliAxis::X, PauliAxis::Y}, {PauliAxis::X, PauliAxis::Z},
    {PauliAxis::Y, PauliAxis::X}, {PauliAxis::Y, PauliAxis::Y}, {PauliAxis::Y, PauliAxis::Z},
    {PauliAxis::Z, PauliAxis::X}, {PauliAxis::Z, PauliAxis::Y}, {PauliAxis::Z, PauliAxis::Z},
}};

}  // namespace

const ComplexMatrix& coefficient_basis_matrix(int k) {
  if (k < 1 || k > 15) {
    throw std::out_of_range("coefficient_basis_matrix: index " + std::to_string(k));
  }
  const auto [alpha, beta] = kBasisOrder[static_cast<std::size_t>(k - 1)];
  return pauli_tensor(alpha, beta);
}

ComplexMatrix build_hamiltonian(const HamiltonianCoeffs& c) {
  ComplexMatrix h(4);
  for (int k = 1; k <= 15; ++k) {
    const double ak = c.at(k);
    if (ak == 0.0) continue;
    const ComplexMatrix& basis = coefficient_basis_matrix(k);
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col) h(r, col) += (0.5 * ak) * basis(r, col);
  }
  return h;
}

CouplingForm coupling_form(const HamiltonianCoeffs& c) {
  bool any_coupling = false;
  bool any_cross = false;
  for (int k = 7; k <= 15; ++k) {
    if (c.at(k) == 0.0) continue;
    any_coupling = true;
    if (k != 7 && k != 11 && k != 15) any_cross = true;
  }
  if (!any_coupling) return CouplingForm::LocalOnly;
  return any_cross ? CouplingForm::GeneralCoupling : CouplingForm::DiagonalCoupling;
}

}  // namespace entdyn
