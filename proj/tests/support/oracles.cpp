#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace entdyn::test_support {

ComplexMatrix taylor_expm(const ComplexMatrix& m, double t, int terms) {
  const int n = m.dim();
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  const ComplexMatrix scaled = Complex{0.0, t} * m;  // i m t
  for (int k = 1; k <= terms; ++k) {
    term = (1.0 / k) * (term * scaled);
    sum = sum + term;
  }
  return sum;
}

std::vector<double> char_poly_eigenvalues(const ComplexMatrix& m) {
  const int n = m.dim();
  if (n > 4) throw std::invalid_argument("char_poly_eigenvalues: dim must be <= 4");

  // Faddeev-LeVerrier: p(x) = x^n + c[1] x^{n-1} + ... + c[n].
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  ComplexMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    Complex tr{0.0, 0.0};
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    c[static_cast<std::size_t>(k)] = -tr.real() / k;
    if (k < n) {
      ComplexMatrix shifted = mk;
      for (int i = 0; i < n; ++i) shifted(i, i) += c[static_cast<std::size_t>(k)];
      mk = m * shifted;
    }
  }

  auto poly = [&](Complex x) {
    Complex v{1.0, 0.0};
    for (int k = 1; k <= n; ++k) v = v * x + c[static_cast<std::size_t>(k)];
    return v;
  };

  // Durand-Kerner from a non-real, non-symmetric starting spread.
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  const Complex seed{0.4, 0.9};
  Complex w{1.0, 0.0};
  for (auto& r : roots) {
    w *= seed;
    r = w;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex denom{1.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      }
      const Complex delta = poly(roots[static_cast<std::size_t>(i)]) / denom;
      roots[static_cast<std::size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }

  std::vector<double> out;
  out.reserve(roots.size());
  for (const Complex& r : roots) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using XVec = std::array<Complex, 10>;

XVec apply_iA(const ComplexMatrix& a, const XVec& x) {
  XVec out{};
  for (int r = 0; r < 10; ++r) {
    Complex s{0.0, 0.0};
    for (int col = 0; col < 10; ++col) s += a(r, col) * x[static_cast<std::size_t>(col)];
    out[static_cast<std::size_t>(r)] = Complex{0.0, 1.0} * s;
  }
  return out;
}

void rk4_step(const ComplexMatrix& a, XVec& x, double h) {
  const XVec k1 = apply_iA(a, x);
  XVec tmp;
  for (int i = 0; i < 10; ++i) tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * h * k1[static_cast<std::size_t>(i)];
  const XVec k2 = apply_iA(a, tmp);
  for (int i = 0; i < 10; ++i) tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + 0.5 * h * k2[static_cast<std::size_t>(i)];
  const XVec k3 = apply_iA(a, tmp);
  for (int i = 0; i < 10; ++i) tmp[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + h * k3[static_cast<std::size_t>(i)];
  const XVec k4 = apply_iA(a, tmp);
  for (int i = 0; i < 10; ++i) {
    x[static_cast<std::size_t>(i)] +=
        (h / 6.0) * (k1[static_cast<std::size_t>(i)] + 2.0 * k2[static_cast<std::size_t>(i)] +
                     2.0 * k3[static_cast<std::size_t>(i)] + k4[static_cast<std::size_t>(i)]);
  }
}

}  // namespace

std::vector<SuperVector> rk4_x_samples(const HamiltonianCoeffs& c, const TwoQubitState& psi0,
                                       const TimeGrid& grid, double max_step) {
  const ComplexMatrix a = build_A(c).generator;
  XVec x = x_from_state(psi0).x;
  std::vector<SuperVector> out;
  out.reserve(static_cast<std::size_t>(grid.steps) + 1);
  out.push_back(SuperVector{x});
  const double dt = (grid.t1 - grid.t0) / grid.steps;
  const int substeps = std::max(1, static_cast<int>(std::ceil(dt / max_step)));
  const double h = dt / substeps;
  for (int j = 0; j < grid.steps; ++j) {
    for (int s = 0; s < substeps; ++s) rk4_step(a, x, h);
    out.push_back(SuperVector{x});
  }
  return out;
}

TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 4> amps;
  for (auto& amp : amps) amp = Complex{gauss(rng), gauss(rng)};
  return TwoQubitState(amps).renormalized();
}

HamiltonianCoeffs random_coeffs(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  HamiltonianCoeffs c;
  for (int k = 1; k <= 15; ++k) c.at(k) = dist(rng);
  return c;
}

HamiltonianCoeffs random_diagonal_coeffs(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  HamiltonianCoeffs c;
  c.at(7) = dist(rng);
  c.at(11) = dist(rng);
  c.at(15) = dist(rng);
  return c;
}

ComplexMatrix random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::array<Complex, 2> g0 = {Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}};
    std::array<Complex, 2> g1 = {Complex{gauss(rng), gauss(rng)}, Complex{gauss(rng), gauss(rng)}};
    const double n0 = std::sqrt(std::norm(g0[0]) + std::norm(g0[1]));
    if (n0 < 1e-6) continue;
    g0[0] /= n0;
    g0[1] /= n0;
    const Complex overlap = std::conj(g0[0]) * g1[0] + std::conj(g0[1]) * g1[1];
    g1[0] -= overlap * g0[0];
    g1[1] -= overlap * g0[1];
    const double n1 = std::sqrt(std::norm(g1[0]) + std::norm(g1[1]));
    if (n1 < 1e-6) continue;
    ComplexMatrix u(2);
    u(0, 0) = g0[0];
    u(1, 0) = g0[1];
    u(0, 1) = g1[0] / n1;
    u(1, 1) = g1[1] / n1;
    return u;
  }
}

double det_concurrence(const TwoQubitState& psi) {
  const Complex det = psi.amplitude(0) * psi.amplitude(3) - psi.amplitude(1) * psi.amplitude(2);
  return 2.0 * std::abs(det);
}

}  // namespace entdyn::test_support
