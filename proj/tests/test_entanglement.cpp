#include <cmath>
#include <random>

#include "doctest.h"

#include "entdyn/closed_form.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/errors.hpp"
#include "entdyn/pauli.hpp"
#include "support/oracles.hpp"

using namespace entdyn;
namespace ts = entdyn::test_support;

TEST_CASE("operator basis spot checks") {
  const auto& basis = p_matrices();

  CHECK(max_abs_diff(basis[1], ComplexMatrix::identity(4)) == 0.0);  // P2 = I

  // P1 = sy(x)sy, antidiagonal (-1, 1, 1, -1) top to bottom
  CHECK(basis[0](0, 3) == Complex{-1.0, 0.0});
  CHECK(basis[0](1, 2) == Complex{1.0, 0.0});
  CHECK(basis[0](2, 1) == Complex{1.0, 0.0});
  CHECK(basis[0](3, 0) == Complex{-1.0, 0.0});

  // P5 = i sz^1 = diag(i, i, -i, -i)
  CHECK(basis[4](0, 0) == Complex{0.0, 1.0});
  CHECK(basis[4](1, 1) == Complex{0.0, 1.0});
  CHECK(basis[4](2, 2) == Complex{0.0, -1.0});
  CHECK(basis[4](3, 3) == Complex{0.0, -1.0});

  // P7 = sx(x)sz, P9 = sz(x)sx, P6 = i I(x)sx, P8 = i sx(x)I, P10 = i I(x)sz
  CHECK(max_abs_diff(basis[6], pauli_tensor(PauliAxis::X, PauliAxis::Z)) == 0.0);
  CHECK(max_abs_diff(basis[8], pauli_tensor(PauliAxis::Z, PauliAxis::X)) == 0.0);
  CHECK(max_abs_diff(basis[5], Complex{0.0, 1.0} * pauli_tensor(PauliAxis::I, PauliAxis::X)) ==
        0.0);
  CHECK(max_abs_diff(basis[7], Complex{0.0, 1.0} * pauli_tensor(PauliAxis::X, PauliAxis::I)) ==
        0.0);
  CHECK(max_abs_diff(basis[9], Complex{0.0, 1.0} * pauli_tensor(PauliAxis::I, PauliAxis::Z)) ==
        0.0);
  CHECK(max_abs_diff(basis[2], pauli_tensor(PauliAxis::X, PauliAxis::X)) == 0.0);
  CHECK(max_abs_diff(basis[3], pauli_tensor(PauliAxis::Z, PauliAxis::Z)) == 0.0);
}

TEST_CASE("x_from_state of |00>") {
  const SuperVector x = x_from_state(TwoQubitState::basis(0));
  const Complex expected[10] = {{0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 1},
                                {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}};
  for (int k = 0; k < 10; ++k) {
    CHECK(std::abs(x.x[static_cast<std::size_t>(k)] - expected[k]) < 1e-15);
  }
}

TEST_CASE("x_from_state of the Bell state has x1 = -1") {
  const SuperVector x = x_from_state(TwoQubitState::bell_phi_plus());
  CHECK(std::abs(x.x[0] - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("supervector norm is 2 for normalized states") {
  std::mt19937_64 rng(501);
  for (int rep = 0; rep < 100; ++rep) {
    const SuperVector x = x_from_state(ts::random_state(rng));
    CHECK(std::abs(x.norm() - 2.0) < 1e-9);
  }
}

TEST_CASE("x_from_state rejects unnormalized input") {
  const TwoQubitState bad({Complex{1.0, 0.0}, Complex{1.0, 0.0}, 0.0, 0.0});
  CHECK_THROWS_AS(x_from_state(bad), NotNormalizedError);
  CHECK_THROWS_AS(concurrence(bad), NotNormalizedError);
  CHECK_THROWS_AS(pq_from_state(bad), NotNormalizedError);
}

TEST_CASE("concurrence on reference states") {
  CHECK(concurrence(TwoQubitState::basis(0)) == 0.0);
  CHECK(std::abs(concurrence(TwoQubitState::bell_phi_plus()) - 1.0) < 1e-12);

  // (sqrt(3)|00> + |11>)/2: both the bilinear form and the reshape
  // determinant give sqrt(3)/2.
  const TwoQubitState partial(
      {Complex{std::sqrt(3.0) / 2.0, 0.0}, 0.0, 0.0, Complex{0.5, 0.0}});
  const double expected = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(concurrence(partial) - expected) < 1e-12);
  CHECK(std::abs(ts::det_concurrence(partial) - expected) < 1e-12);
}

TEST_CASE("concurrence equals the reshape-determinant oracle") {
  std::mt19937_64 rng(502);
  for (int rep = 0; rep < 200; ++rep) {
    const TwoQubitState psi = ts::random_state(rng);
    const double c = concurrence(psi);
    CHECK(std::abs(c - ts::det_concurrence(psi)) < 1e-12);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0 + 1e-12);
    CHECK(std::abs(c - std::abs(x_from_state(psi).x[0])) < 1e-15);
  }
}

TEST_CASE("build_A of the zero vector is the zero matrix") {
  CHECK(build_A(HamiltonianCoeffs{}).generator.max_abs() == 0.0);
}

TEST_CASE("build_A with a11 = 1 has exactly six entries") {
  HamiltonianCoeffs c;
  c.at(11) = 1.0;
  const ComplexMatrix a = build_A(c).generator;
  for (int r = 0; r < 10; ++r) {
    for (int col = 0; col < 10; ++col) {
      Complex expected{0.0, 0.0};
      if ((r == 0 && col == 1) || (r == 1 && col == 0)) expected = 1.0;
      if ((r == 2 && col == 3) || (r == 3 && col == 2)) expected = -1.0;
      if ((r == 6 && col == 8) || (r == 8 && col == 6)) expected = 1.0;
      CHECK(a(r, col) == expected);
    }
  }
}

TEST_CASE("build_A is Hermitian, bitwise") {
  std::mt19937_64 rng(503);
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexMatrix a = build_A(ts::random_coeffs(rng)).generator;
    CHECK(max_abs_diff(a, a.adjoint()) == 0.0);
  }
}

TEST_CASE("build_A is exactly linear in the coefficients") {
  // Each generator entry is a single +-a_k or +-i a_k, so linearity holds
  // bitwise even for arbitrary doubles.
  std::mt19937_64 rng(504);
  for (int rep = 0; rep < 20; ++rep) {
    const HamiltonianCoeffs a = ts::random_coeffs(rng);
    const HamiltonianCoeffs b = ts::random_coeffs(rng);
    HamiltonianCoeffs sum;
    for (int k = 1; k <= 15; ++k) sum.at(k) = a.at(k) + b.at(k);
    CHECK(max_abs_diff(build_A(sum).generator,
                       build_A(a).generator + build_A(b).generator) == 0.0);
  }
}

TEST_CASE("diagonal coupling zeroes the off blocks of the generator") {
  std::mt19937_64 rng(505);
  for (int rep = 0; rep < 20; ++rep) {
    const HamiltonianCoeffs c = ts::random_diagonal_coeffs(rng);
    const ComplexMatrix a = build_A(c).generator;
    for (int r = 0; r < 4; ++r) {
      for (int col = 4; col < 10; ++col) {
        CHECK(a(r, col) == Complex{0.0, 0.0});
        CHECK(a(col, r) == Complex{0.0, 0.0});
      }
    }
  }
}

TEST_CASE("verify_row_identity on the zero vector") {
  for (int k = 1; k <= 10; ++k) CHECK(verify_row_identity(HamiltonianCoeffs{}, k, 1e-15));
}

TEST_CASE("verify_row_identity on the Josephson coefficients") {
  const JosephsonParams params(1.0, 1.0);
  CHECK(verify_row_identity(params.coeffs(), 1, 1e-12));
}

TEST_CASE("verify_row_identity holds for random coefficients, every row") {
  std::mt19937_64 rng(506);
  for (int rep = 0; rep < 100; ++rep) {
    const HamiltonianCoeffs c = ts::random_coeffs(rng);
    for (int k = 1; k <= 10; ++k) CHECK(verify_row_identity(c, k, 1e-12));
  }
}

TEST_CASE("verify_row_identity rejects out-of-range rows") {
  CHECK_THROWS_AS(verify_row_identity(HamiltonianCoeffs{}, 0, 1e-12), std::out_of_range);
  CHECK_THROWS_AS(verify_row_identity(HamiltonianCoeffs{}, 11, 1e-12), std::out_of_range);
}

TEST_CASE("pq_from_state of |00>") {
  const PQVector pq = pq_from_state(TwoQubitState::basis(0));
  const double p_expected[10] = {0, 1, 0, 1, 0, 0, 0, 0, 0, 0};
  const double q_expected[10] = {0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
  for (int k = 0; k < 10; ++k) {
    CHECK(pq.p[static_cast<std::size_t>(k)] == p_expected[k]);
    CHECK(pq.q[static_cast<std::size_t>(k)] == q_expected[k]);
  }
}

TEST_CASE("pq_from_state of the Bell state") {
  const PQVector pq = pq_from_state(TwoQubitState::bell_phi_plus());
  CHECK(std::abs(pq.p[0] - (-1.0)) < 1e-12);
  CHECK(pq.q[0] == 0.0);
}

TEST_CASE("pq components assemble the supervector") {
  std::mt19937_64 rng(507);
  for (int rep = 0; rep < 200; ++rep) {
    const TwoQubitState psi = ts::random_state(rng);
    const PQVector pq = pq_from_state(psi);
    const SuperVector x = x_from_state(psi);
    double norm_sq = 0.0;
    for (int k = 0; k < 10; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      CHECK(std::abs(Complex{pq.p[idx], pq.q[idx]} - x.x[idx]) < 1e-12);
      norm_sq += pq.p[idx] * pq.p[idx] + pq.q[idx] * pq.q[idx];
    }
    CHECK(std::abs(norm_sq - 4.0) < 1e-9);
  }
}
