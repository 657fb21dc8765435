#include "entdyn/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "entdyn/errors.hpp"
#include "entdyn/pauli.hpp"

namespace entdyn {

TwoQubitState TwoQubitState::basis(int index) {
  if (index < 0 || index > 3) {
    throw std::out_of_range("TwoQubitState::basis: index " + std::to_string(index));
  }
  TwoQubitState s;
  s.amplitudes_[static_cast<std::size_t>(index)] = 1.0;
  return s;
}

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TwoQubitState TwoQubitState::bell_phi_plus() {
  return TwoQubitState({Complex{kInvSqrt2, 0.0}, 0.0, 0.0, Complex{kInvSqrt2, 0.0}});
}

TwoQubitState TwoQubitState::bell_phi_minus() {
  return TwoQubitState({Complex{kInvSqrt2, 0.0}, 0.0, 0.0, Complex{-kInvSqrt2, 0.0}});
}

TwoQubitState TwoQubitState::bell_psi_plus() {
  return TwoQubitState({0.0, Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}, 0.0});
}

TwoQubitState TwoQubitState::bell_psi_minus() {
  return TwoQubitState({0.0, Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}, 0.0});
}

double TwoQubitState::real_component(int l) const {
  if (l < 1 || l > 8) {
    throw std::out_of_range("TwoQubitState::real_component: index " + std::to_string(l));
  }
  const Complex amp = amplitudes_[static_cast<std::size_t>((l - 1) / 2)];
  return (l % 2 == 1) ? amp.real() : amp.imag();
}

double TwoQubitState::norm() const {
  double s = 0.0;
  for (const Complex& amp : amplitudes_) s += std::norm(amp);
  return std::sqrt(s);
}

TwoQubitState TwoQubitState::renormalized() const {
  const double n = norm();
  if (n == 0.0) throw NotNormalizedError("renormalized: zero state vector");
  TwoQubitState out = *this;
  for (Complex& amp : out.amplitudes_) amp /= n;
  return out;
}

void TwoQubitState::require_normalized(double tol) const {
  const double n = norm();
  if (std::abs(n - 1.0) > tol) {
    throw NotNormalizedError("state norm " + std::to_string(n) + " deviates from 1 beyond " +
                             std::to_string(tol));
  }
}

namespace {

bool is_unitary2(const ComplexMatrix& u, double tol) {
  if (u.dim() != 2) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  return max_abs_diff(gram, ComplexMatrix::identity(2)) <= tol;
}

}  // namespace

TwoQubitState apply_local_unitary(const TwoQubitState& psi, const ComplexMatrix& u1,
                                  const ComplexMatrix& u2) {
  if (!is_unitary2(u1, 1e-10)) throw NotUnitaryError("apply_local_unitary: u1 is not unitary");
  if (!is_unitary2(u2, 1e-10)) throw NotUnitaryError("apply_local_unitary: u2 is not unitary");
  const ComplexMatrix op = kron(u1, u2);
  std::array<Complex, 4> out{};
  for (int r = 0; r < 4; ++r) {
    Complex s{0.0, 0.0};
    for (int c = 0; c < 4; ++c) s += op(r, c) * psi.amplitude(c);
    out[static_cast<std::size_t>(r)] = s;
  }
  return TwoQubitState(out);
}

}  // namespace entdyn
