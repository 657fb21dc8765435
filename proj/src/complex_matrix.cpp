#include "entdyn/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "entdyn/errors.hpp"

namespace entdyn {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 2 || dim > kMaxMatrixDim) {
    throw std::invalid_argument("ComplexMatrix: dimension " + std::to_string(dim) +
                                " outside supported range 2.." + std::to_string(kMaxMatrixDim));
  }
  a_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator+");
  ComplexMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator-");
  ComplexMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out(r, c) = scale * m(r, c);
  return out;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& m) {
  return Complex{scale, 0.0} * m;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (static_cast<int>(v.size()) != m.dim()) {
    throw std::invalid_argument("matrix-vector product: size mismatch");
  }
  std::vector<Complex> out(v.size(), Complex{0.0, 0.0});
  for (int r = 0; r < m.dim(); ++r) {
    Complex s{0.0, 0.0};
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = r; c < m.dim(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-13;

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// Zeroes entry (p, q) of the Hermitian working matrix with the plane
// rotation G = diag-phase * real-rotation, updating a <- G^dag a G and
// accumulating v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const double phi = std::arg(apq);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex eip = std::polar(1.0, phi);    // e^{+i phi}
  const Complex eim = std::conj(eip);          // e^{-i phi}

  const int n = a.dim();
  // Rows: row_p <- c*row_p + s*e^{+i phi}*row_q ; row_q <- -s*row_p + c*e^{+i phi}*row_q
  for (int j = 0; j < n; ++j) {
    const Complex ap = a(p, j);
    const Complex aq = a(q, j);
    a(p, j) = c * ap + s * eip * aq;
    a(q, j) = -s * ap + c * eip * aq;
  }
  // Columns: col_p <- c*col_p + s*e^{-i phi}*col_q ; col_q <- -s*col_p + c*e^{-i phi}*col_q
  for (int i = 0; i < n; ++i) {
    const Complex ap = a(i, p);
    const Complex aq = a(i, q);
    a(i, p) = c * ap + s * eim * aq;
    a(i, q) = -s * ap + c * eim * aq;
    const Complex vp = v(i, p);
    const Complex vq = v(i, q);
    v(i, p) = c * vp + s * eim * vq;
    v(i, q) = -s * vp + c * eim * vq;
  }
  // Clean up rounding residue at the eliminated positions.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex{a(p, p).real(), 0.0};
  a(q, q) = Complex{a(q, q).real(), 0.0};
}

}  // namespace

SpectralDecomposition spectral_decompose(const ComplexMatrix& m) {
  if (!is_hermitian(m, 1e-9)) {
    throw NotHermitianError("spectral_decompose: input is not Hermitian within 1e-9");
  }
  const int n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize so rounding-level asymmetry cannot bias the iteration.
  for (int r = 0; r < n; ++r) {
    a(r, r) = Complex{a(r, r).real(), 0.0};
    for (int c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kOffDiagonalThreshold * std::max(1.0, m.frobenius_norm());
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    throw ConvergenceError("spectral_decompose: Jacobi iteration did not converge in " +
                           std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  // Sort ascending; stable so degenerate eigenvalues keep a deterministic order.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[static_cast<std::size_t>(k)] = a(src, src).real();
    // Phase fix: rotate the column so its largest-magnitude entry is real positive.
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(v(i, src));
      if (mag > best + 1e-12) {
        best = mag;
        pivot = i;
      }
    }
    Complex phase{1.0, 0.0};
    if (best > 0.0) phase = std::conj(v(pivot, src)) / std::abs(v(pivot, src));
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = phase * v(i, src);
  }
  return out;
}

ComplexMatrix unitary_propagator(const ComplexMatrix& m, double t) {
  const SpectralDecomposition sd = spectral_decompose(m);
  const int n = m.dim();
  const ComplexMatrix& vec = sd.eigenvectors;
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex s{0.0, 0.0};
      for (int k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, sd.eigenvalues[static_cast<std::size_t>(k)] * t);
        s += vec(r, k) * phase * std::conj(vec(c, k));
      }
      out(r, c) = s;
    }
  }
  return out;
}

}  // namespace entdyn
