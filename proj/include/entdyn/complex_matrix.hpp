#pragma once

#include <complex>
#include <span>
#include <vector>

namespace entdyn {

using Complex = std::complex<double>;

inline constexpr int kMaxMatrixDim = 16;

// Dense square complex matrix, row-major, dimension 2..16.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);  // zero-filled
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int row, int col) { return a_[static_cast<std::size_t>(row) * dim_ + col]; }
  const Complex& operator()(int row, int col) const {
    return a_[static_cast<std::size_t>(row) * dim_ + col];
  }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;

  double max_abs() const;
  double frobenius_norm() const;

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
ComplexMatrix operator*(double scale, const ComplexMatrix& m);

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// True iff max-abs of (m - m^dagger) <= tol.
bool is_hermitian(const ComplexMatrix& m, double tol);

// Eigensystem of a Hermitian matrix. Columns of `eigenvectors` are
// orthonormal eigenvectors, ordered to match `eigenvalues` (ascending).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization. Requires is_hermitian(m, 1e-9); throws
// NotHermitianError otherwise, ConvergenceError if the sweep budget runs out.
// Output ordering is deterministic: eigenvalues ascending, each eigenvector
// phased so its largest-magnitude entry is real positive.
SpectralDecomposition spectral_decompose(const ComplexMatrix& m);

// exp(i*m*t) for Hermitian m, via the spectral decomposition.
ComplexMatrix unitary_propagator(const ComplexMatrix& m, double t);

}  // namespace entdyn
