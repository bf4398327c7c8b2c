#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "entdecay/error.hpp"

namespace entdecay {

using Complex = std::complex<double>;

/// Maximum allowed max-entry deviation of a matrix from its adjoint before
/// it is rejected as non-Hermitian.
inline constexpr double hermiticity_tol = 1e-10;

/// Eigenvalues in [spectrum_floor, 0) are floating point noise on positive
/// semidefinite inputs and are clamped to zero; anything below is an error.
inline constexpr double spectrum_floor = -1e-10;

inline constexpr double jacobi_off_diagonal_threshold = 1e-13;
inline constexpr int jacobi_max_sweeps = 100;

/// Dense row-major square complex matrix with compile-time dimension.
/// Value type: all operations return fresh matrices.
template <std::size_t N>
class SquareMatrix {
  static_assert(N == 2 || N == 4, "only 2x2 and 4x4 matrices are supported");

 public:
  static constexpr std::size_t dim = N;

  SquareMatrix() : e_{} {}

  /// Row-major initialization; the list must hold exactly N*N entries.
  SquareMatrix(std::initializer_list<Complex> init) : e_{} {
    if (init.size() != N * N) {
      throw ValidationError("matrix initializer has wrong entry count");
    }
    std::copy(init.begin(), init.end(), e_.begin());
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return e_[r * N + c];
  }

  SquareMatrix operator+(const SquareMatrix& o) const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
  }

  SquareMatrix operator-(const SquareMatrix& o) const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
  }

  SquareMatrix operator*(const SquareMatrix& o) const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex a = (*this)(i, k);
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += a * o(k, j);
      }
    }
    return out;
  }

  SquareMatrix operator*(Complex s) const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = e_[i] * s;
    return out;
  }

  friend SquareMatrix operator*(Complex s, const SquareMatrix& m) {
    return m * s;
  }

  SquareMatrix transpose() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  SquareMatrix conjugate() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.e_[i] = std::conj(e_[i]);
    return out;
  }

  SquareMatrix adjoint() const { return conjugate().transpose(); }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : e_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Max-entry deviation from the adjoint; zero for exactly Hermitian input.
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  bool is_finite() const {
    for (const Complex& v : e_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
  }

 private:
  std::array<Complex, N * N> e_;
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

/// Kronecker product with the left operand acting on the first subsystem:
/// out(2i+k, 2j+l) = a(i,j) * b(k,l).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

struct PauliSet {
  Mat2 identity;
  Mat2 sigma_x;
  Mat2 sigma_y;
  Mat2 sigma_z;
};

inline const PauliSet& paulis() {
  static const PauliSet set = [] {
    const Complex i(0.0, 1.0);
    PauliSet s;
    s.identity = Mat2::identity();
    s.sigma_x = Mat2{0.0, 1.0, 1.0, 0.0};
    s.sigma_y = Mat2{0.0, -i, i, 0.0};
    s.sigma_z = Mat2{1.0, 0.0, 0.0, -1.0};
    return s;
  }();
  return set;
}

/// Spectral decomposition of a Hermitian matrix. values are sorted
/// descending and vectors[k] is the orthonormal eigenvector for values[k].
template <std::size_t N>
struct EigenDecomposition {
  std::array<double, N> values;
  std::array<std::array<Complex, N>, N> vectors;
};

namespace detail {

// One cyclic-Jacobi rotation zeroing the (p, q) entry of the Hermitian
// matrix a, with the same unitary accumulated into q_acc.
template <std::size_t N>
void jacobi_rotate(SquareMatrix<N>& a, SquareMatrix<N>& q_acc, std::size_t p,
                   std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const Complex phase = apq / r;  // e^{i arg(apq)}
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // Rows p and q of a <- V^H a, with V = diag(1, conj(phase)) * G(c, s).
  for (std::size_t j = 0; j < N; ++j) {
    const Complex tp = a(p, j);
    const Complex tq = a(q, j);
    a(p, j) = c * tp - s * phase * tq;
    a(q, j) = s * tp + c * phase * tq;
  }
  // Columns p and q of a <- a V, and of the eigenvector accumulator.
  for (std::size_t i = 0; i < N; ++i) {
    const Complex tp = a(i, p);
    const Complex tq = a(i, q);
    a(i, p) = c * tp - s * std::conj(phase) * tq;
    a(i, q) = s * tp + c * std::conj(phase) * tq;

    const Complex up = q_acc(i, p);
    const Complex uq = q_acc(i, q);
    q_acc(i, p) = c * up - s * std::conj(phase) * uq;
    q_acc(i, q) = s * up + c * std::conj(phase) * uq;
  }
}

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for Hermitian matrices. The dimension is tiny
/// and fixed, so plain sweeps converge in a handful of iterations.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigen(const SquareMatrix<N>& m) {
  if (!m.is_finite()) {
    throw ValidationError("eigensolver input has non-finite entries");
  }
  if (m.hermiticity_defect() > hermiticity_tol) {
    throw ValidationError("eigensolver input is not Hermitian");
  }

  SquareMatrix<N> a = (m + m.adjoint()) * Complex(0.5);
  SquareMatrix<N> q = SquareMatrix<N>::identity();

  for (int sweep = 0; sweep < jacobi_max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= jacobi_off_diagonal_threshold) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t col = p + 1; col < N; ++col)
        detail::jacobi_rotate(a, q, p, col);
  }

  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors[k][i] = q(i, order[k]);
  }
  return out;
}

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [spectrum_floor, 0) are clamped to zero.
template <std::size_t N>
SquareMatrix<N> matrix_sqrt_psd(const SquareMatrix<N>& m) {
  const EigenDecomposition<N> eig = hermitian_eigen(m);
  std::array<double, N> roots{};
  for (std::size_t k = 0; k < N; ++k) {
    if (eig.values[k] < spectrum_floor) {
      throw ValidationError("matrix is not positive semidefinite");
    }
    roots[k] = std::sqrt(std::max(eig.values[k], 0.0));
  }

  SquareMatrix<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        out(i, j) += roots[k] * eig.vectors[k][i] * std::conj(eig.vectors[k][j]);
  }
  return out;
}

}  // namespace entdecay
