#pragma once

#include <random>
#include <vector>

#include "entdyn/complex_matrix.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/hamiltonian.hpp"
#include "entdyn/propagation.hpp"
#include "entdyn/state.hpp"

// Independent reference computations for the test suites. Nothing here may
// route through spectral_decompose / unitary_propagator, so agreement with
// the library is evidence rather than tautology.
namespace entdyn::test_support {

// exp(i m t) by truncated power series.
ComplexMatrix taylor_expm(const ComplexMatrix& m, double t, int terms = 30);

// Eigenvalues of a real-symmetric matrix (dim <= 4) via characteristic
// polynomial coefficients (Faddeev-LeVerrier) and Durand-Kerner root
// iteration; sorted ascending.
std::vector<double> char_poly_eigenvalues(const ComplexMatrix& m);

// Fixed-step RK4 integration of xdot = i A x, sampled on the grid. Substeps
// between samples are sized so no step exceeds max_step.
std::vector<SuperVector> rk4_x_samples(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                       const TimeGrid& grid, double max_step);

TwoQubitState random_state(std::mt19937_64& rng);
HamiltonianCoeffs random_coeffs(std::mt19937_64& rng, double scale = 2.0);
HamiltonianCoeffs random_diagonal_coeffs(std::mt19937_64& rng, double scale = 2.0);

// Haar-adequate 2x2 unitary: Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary2(std::mt19937_64& rng);

// Concurrence via the reshape identity C = 2 |det [[a00, a01], [a10, a11]]|.
double det_concurrence(const TwoQubitState& psi);

}  // namespace entdyn::test_support
