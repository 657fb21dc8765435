#include "entdyn/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entdyn/errors.hpp"
#include "entdyn/pauli.hpp"

namespace entdyn {

double SuperVector::norm() const {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return std::sqrt(s);
}

const std::array<ComplexMatrix, 10>& p_matrices() {
  static const std::array<ComplexMatrix, 10> table = [] {
    const Complex i{0.0, 1.0};
    return std::array<ComplexMatrix, 10>{
        pauli_tensor(PauliAxis::Y, PauliAxis::Y),       // P1
        pauli_tensor(PauliAxis::I, PauliAxis::I),       // P2
        pauli_tensor(PauliAxis::X, PauliAxis::X),       // P3
        pauli_tensor(PauliAxis::Z, PauliAxis::Z),       // P4
        i * pauli_tensor(PauliAxis::Z, PauliAxis::I),   // P5
        i * pauli_tensor(PauliAxis::I, PauliAxis::X),   // P6
        pauli_tensor(PauliAxis::X, PauliAxis::Z),       // P7
        i * pauli_tensor(PauliAxis::X, PauliAxis::I),   // P8
        pauli_tensor(PauliAxis::Z, PauliAxis::X),       // P9
        i * pauli_tensor(PauliAxis::I, PauliAxis::Z),   // P10
    };
  }();
  return table;
}

Complex bilinear(const TwoQubitState& psi, const ComplexMatrix& m) {
  Complex s{0.0, 0.0};
  for (int r = 0; r < 4; ++r) {
    if (psi.amplitude(r) == Complex{0.0, 0.0}) continue;
    for (int c = 0; c < 4; ++c) s += psi.amplitude(r) * m(r, c) * psi.amplitude(c);
  }
  return s;
}

SuperVector x_from_state(const TwoQubitState& psi) {
  psi.require_normalized();
  SuperVector out;
  const auto& basis = p_matrices();
  for (int k = 0; k < 10; ++k) out.x[static_cast<std::size_t>(k)] = bilinear(psi, basis[static_cast<std::size_t>(k)]);
  return out;
}

double concurrence(const TwoQubitState& psi) {
  psi.require_normalized();
  return std::abs(bilinear(psi, pauli_tensor(PauliAxis::Y, PauliAxis::Y)));
}

namespace {

// One generator entry: coefficient slot (0 = structural zero) and the unit
// multiplier attached to it.
struct GeneratorEntry {
  int coeff;  // 1..15, or 0
  Complex unit;
};

constexpr Complex kOne{1.0, 0.0};
constexpr Complex kI{0.0, 1.0};

// Row k lists the expansion coefficients of H^T P_k + P_k H in the P basis;
// verify_row_identity recomputes that expansion from scratch and is the
// guard against transcription slips in this table.
const std::array<std::array<GeneratorEntry, 10>, 10> kGeneratorTable = {{
    {{{0, kOne}, {11, kOne}, {15, -kOne}, {7, -kOne}, {8, -kOne},
      {12, kOne}, {13, kOne}, {14, kOne}, {9, kOne}, {10, -kOne}}},
    {{{11, kOne}, {0, kOne}, {7, kOne}, {15, kOne}, {3, -kI},
      {4, -kI}, {9, kOne}, {1, -kI}, {13, kOne}, {6, -kI}}},
    {{{15, -kOne}, {7, kOne}, {0, kOne}, {11, -kOne}, {10, kOne},
      {1, -kI}, {5, kI}, {4, -kI}, {2, kI}, {8, kOne}}},
    {{{7, -kOne}, {15, kOne}, {11, -kOne}, {0, kOne}, {6, -kI},
      {14, -kOne}, {2, -kI}, {12, -kOne}, {5, -kI}, {3, -kI}}},
    {{{8, -kOne}, {3, kI}, {10, kOne}, {6, kI}, {0, kOne},
      {13, kOne}, {12, kOne}, {2, -kI}, {4, kI}, {15, kOne}}},
    {{{12, kOne}, {4, kI}, {1, kI}, {14, -kOne}, {13, kOne},
      {0, kOne}, {8, -kOne}, {7, kOne}, {3, kI}, {5, kI}}},
    {{{13, kOne}, {9, kOne}, {5, -kI}, {2, kI}, {12, kOne},
      {8, -kOne}, {0, kOne}, {6, -kI}, {11, kOne}, {1, -kI}}},
    {{{14, kOne}, {1, kI}, {4, kI}, {12, -kOne}, {2, kI},
      {7, kOne}, {6, kI}, {0, kOne}, {10, -kOne}, {9, kOne}}},
    {{{9, kOne}, {13, kOne}, {2, -kI}, {5, kI}, {4, -kI},
      {3, -kI}, {11, kOne}, {10, -kOne}, {0, kOne}, {14, kOne}}},
    {{{10, -kOne}, {6, kI}, {8, kOne}, {3, kI}, {15, kOne},
      {5, -kI}, {1, kI}, {9, kOne}, {14, kOne}, {0, kOne}}},
}};

}  // namespace

AMatrix build_A(const HamiltonianCoeffs& c) {
  AMatrix out{ComplexMatrix(10), c};
  for (int r = 0; r < 10; ++r) {
    for (int col = 0; col < 10; ++col) {
      const GeneratorEntry& e = kGeneratorTable[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (e.coeff == 0) continue;
      out.generator(r, col) = e.unit * c.at(e.coeff);
    }
  }
  return out;
}

bool verify_row_identity(const HamiltonianCoeffs& c, int k, double tol) {
  if (k < 1 || k > 10) {
    throw std::out_of_range("verify_row_identity: row index " + std::to_string(k));
  }
  const ComplexMatrix h = build_hamiltonian(c);
  const auto& basis = p_matrices();
  const ComplexMatrix& pk = basis[static_cast<std::size_t>(k - 1)];
  const ComplexMatrix lhs = h.transpose() * pk + pk * h;

  const AMatrix a = build_A(c);
  ComplexMatrix rhs(4);
  for (int j = 0; j < 10; ++j) {
    const Complex akj = a.generator(k - 1, j);
    if (akj == Complex{0.0, 0.0}) continue;
    rhs = rhs + akj * basis[static_cast<std::size_t>(j)];
  }
  return max_abs_diff(lhs, rhs) <= tol;
}

PQVector pq_from_state(const TwoQubitState& psi) {
  psi.require_normalized();
  const double f1 = psi.real_component(1), f2 = psi.real_component(2);
  const double f3 = psi.real_component(3), f4 = psi.real_component(4);
  const double f5 = psi.real_component(5), f6 = psi.real_component(6);
  const double f7 = psi.real_component(7), f8 = psi.real_component(8);

  PQVector out;
  out.p = {
      2.0 * (f3 * f5 - f4 * f6 - f1 * f7 + f2 * f8),
      f1 * f1 - f2 * f2 + f3 * f3 - f4 * f4 + f5 * f5 - f6 * f6 + f7 * f7 - f8 * f8,
      2.0 * (f3 * f5 - f4 * f6 + f1 * f7 - f2 * f8),
      f1 * f1 - f2 * f2 - f3 * f3 + f4 * f4 - f5 * f5 + f6 * f6 + f7 * f7 - f8 * f8,
      2.0 * (-f1 * f2 - f3 * f4 + f5 * f6 + f7 * f8),
      2.0 * (-f2 * f3 - f1 * f4 - f6 * f7 - f5 * f8),
      2.0 * (f1 * f5 - f2 * f6 - f3 * f7 + f4 * f8),
      2.0 * (-f2 * f5 - f1 * f6 - f4 * f7 - f3 * f8),
      2.0 * (f1 * f3 - f2 * f4 - f5 * f7 + f6 * f8),
      2.0 * (-f1 * f2 + f3 * f4 - f5 * f6 + f7 * f8),
  };
  out.q = {
      2.0 * (f4 * f5 + f3 * f6 - f2 * f7 - f1 * f8),
      2.0 * (f1 * f2 + f3 * f4 + f5 * f6 + f7 * f8),
      2.0 * (f4 * f5 + f3 * f6 + f2 * f7 + f1 * f8),
      2.0 * (f1 * f2 - f3 * f4 - f5 * f6 + f7 * f8),
      f1 * f1 - f2 * f2 + f3 * f3 - f4 * f4 - f5 * f5 + f6 * f6 - f7 * f7 + f8 * f8,
      2.0 * (f1 * f3 - f2 * f4 + f5 * f7 - f6 * f8),
      2.0 * (f2 * f5 + f1 * f6 - f4 * f7 - f3 * f8),
      2.0 * (f1 * f5 - f2 * f6 + f3 * f7 - f4 * f8),
      2.0 * (f2 * f3 + f1 * f4 - f6 * f7 - f5 * f8),
      f1 * f1 - f2 * f2 - f3 * f3 + f4 * f4 + f5 * f5 - f6 * f6 - f7 * f7 + f8 * f8,
  };
  return out;
}

}  // namespace entdyn
