#include "entdyn/pauli.hpp"

#include <array>

namespace entdyn {

namespace {

ComplexMatrix make_pauli(PauliAxis axis) {
  ComplexMatrix m(2);
  switch (axis) {
    case PauliAxis::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = Complex{0.0, -1.0};
      m(1, 0) = Complex{0.0, 1.0};
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

}  // namespace

const ComplexMatrix& pauli_matrix(PauliAxis axis) {
  static const std::array<ComplexMatrix, 4> table = {
      make_pauli(PauliAxis::I), make_pauli(PauliAxis::X), make_pauli(PauliAxis::Y),
      make_pauli(PauliAxis::Z)};
  return table[static_cast<std::size_t>(axis)];
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ra = 0; ra < na; ++ra)
    for (int ca = 0; ca < na; ++ca)
      for (int rb = 0; rb < nb; ++rb)
        for (int cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

const ComplexMatrix& pauli_tensor(PauliAxis alpha, PauliAxis beta) {
  static const std::array<ComplexMatrix, 16> table = [] {
    std::array<ComplexMatrix, 16> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        t[static_cast<std::size_t>(a * 4 + b)] =
            kron(pauli_matrix(static_cast<PauliAxis>(a)), pauli_matrix(static_cast<PauliAxis>(b)));
    return t;
  }();
  return table[static_cast<std::size_t>(static_cast<int>(alpha) * 4 + static_cast<int>(beta))];
}

}  // namespace entdyn
