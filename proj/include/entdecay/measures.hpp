#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "entdecay/error.hpp"
#include "entdecay/linalg.hpp"
#include "entdecay/states.hpp"

namespace entdecay {

/// Bell weights at or below this threshold count as zero when deciding
/// whether the rank-2 distillable-entanglement closed form applies.
inline constexpr double significant_weight_tol = 1e-9;

/// Concurrence, entanglement of formation and (when the Bell-diagonal
/// closed form applies) distillable entanglement, all in [0, 1] ebits.
struct EntanglementValues {
  double concurrence = 0.0;
  double eof = 0.0;
  std::optional<double> ed;
};

/// Antiunitary spin-flip conjugation: (sigma_y x sigma_y) conj(rho)
/// (sigma_y x sigma_y). Maps density matrices to density matrices.
inline DensityMatrix spin_flip(const DensityMatrix& rho) {
  const Mat4 yy = kron(paulis().sigma_y, paulis().sigma_y);
  return DensityMatrix(yy * rho.mat().conjugate() * yy);
}

/// Binary entropy in bits, with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ValidationError("binary entropy argument must lie in [0, 1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Full spectral concurrence: diagonalizes the Hermitian PSD product
/// sqrt(rho) * spin_flip(rho) * sqrt(rho) and square-roots its eigenvalues,
/// which is numerically stabler than the non-Hermitian product and reuses
/// the Hermitian eigensolver. Serves as the independent oracle for every
/// closed form in this library.
inline double concurrence_oracle(const DensityMatrix& rho) {
  const Mat4 root = matrix_sqrt_psd(rho.mat());
  const Mat4 product = root * spin_flip(rho).mat() * root;
  const auto eig = hermitian_eigen(product);

  std::array<double, 4> lambda{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] < spectrum_floor) {
      throw ValidationError("concurrence product matrix is not PSD");
    }
    lambda[k] = std::sqrt(std::max(eig.values[k], 0.0));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());

  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

/// Concurrence of the mixed iterate with untouched weight P: |2P - 1|.
inline double concurrence_closed_form(double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ValidationError("mixing weight must lie in [0, 1]");
  }
  return std::abs(2.0 * weight - 1.0);
}

/// Entanglement of formation as a function of concurrence:
/// h((1 + sqrt(1 - c^2)) / 2). Monotone increasing, 0 at c=0, 1 at c=1.
inline double eof_from_concurrence(double c) {
  const double cc = std::clamp(c, 0.0, 1.0);
  const double root = std::sqrt(std::max(0.0, 1.0 - cc * cc));
  return binary_entropy(0.5 + 0.5 * root);
}

/// Distillable entanglement of a rank-<=2 Bell-diagonal state:
/// 1 - h(w_max). The hashing lower bound and the relative-entropy upper
/// bound coincide exactly in this regime, and nowhere broader.
inline double distillable_bell_diagonal(const BellDecomposition& bd) {
  int significant = 0;
  double w_max = 0.0;
  for (double w : bd.weights) {
    if (w > significant_weight_tol) ++significant;
    w_max = std::max(w_max, w);
  }
  if (significant > 2) {
    throw StructureError("more than two significant Bell weights");
  }
  return 1.0 - binary_entropy(std::min(w_max, 1.0));
}

/// Concurrence via the spectral oracle, entanglement of formation from it,
/// and distillable entanglement when (and only when) the state is Bell
/// diagonal with at most two significant weights.
inline EntanglementValues measure_all(const DensityMatrix& rho) {
  EntanglementValues out;
  out.concurrence = concurrence_oracle(rho);
  out.eof = eof_from_concurrence(out.concurrence);
  try {
    out.ed = distillable_bell_diagonal(bell_decompose(rho));
  } catch (const StructureError&) {
    // Closed form inapplicable; ed stays empty.
  }
  return out;
}

}  // namespace entdecay
