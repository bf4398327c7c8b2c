#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "entdecay/error.hpp"
#include "entdecay/linalg.hpp"

namespace entdecay {

inline constexpr double trace_tol = 1e-10;
inline constexpr double bell_off_diagonal_tol = 1e-9;
inline constexpr double axis_alignment_tol = 1e-9;

/// Validated bipartite-qubit state: Hermitian, unit trace, positive
/// semidefinite (all within the module tolerances). Immutable after
/// construction, so every downstream operation can trust the invariants.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat4& m) : mat_(m) {
    if (!mat_.is_finite()) {
      throw ValidationError("density matrix has non-finite entries");
    }
    if (mat_.hermiticity_defect() > hermiticity_tol) {
      throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0)) > trace_tol) {
      throw ValidationError("density matrix trace differs from one");
    }
    const auto eig = hermitian_eigen(mat_);
    for (double v : eig.values) {
      if (v < spectrum_floor) {
        throw ValidationError("density matrix has a negative eigenvalue");
      }
    }
  }

  const Mat4& mat() const { return mat_; }

 private:
  Mat4 mat_;
};

/// The maximally entangled reference state: the rank-1 projector onto
/// (|00> + |11>)/sqrt(2), with entries 1/2 at the four corners.
inline DensityMatrix singlet() {
  Mat4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(m);
}

/// Real unit 3-vector selecting the Pauli direction of the noise operator.
/// Any nonzero input is normalized at construction.
class NoiseAxis {
 public:
  NoiseAxis(double x, double y, double z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
      throw ValidationError("noise axis has non-finite components");
    }
    const double norm = std::hypot(x, y, z);
    if (norm == 0.0) {
      throw ValidationError("noise axis must be a nonzero vector");
    }
    nx_ = x / norm;
    ny_ = y / norm;
    nz_ = z / norm;
  }

  double nx() const { return nx_; }
  double ny() const { return ny_; }
  double nz() const { return nz_; }

  /// True when the axis coincides with a coordinate axis (either sign),
  /// the regime where the noisy state stays Bell diagonal.
  bool coordinate_aligned(double tol = axis_alignment_tol) const {
    return std::abs(std::abs(nx_) - 1.0) <= tol ||
           std::abs(std::abs(ny_) - 1.0) <= tol ||
           std::abs(std::abs(nz_) - 1.0) <= tol;
  }

 private:
  double nx_, ny_, nz_;
};

/// The 2x2 operator picked out by the axis: nx*sigma_x + ny*sigma_y + nz*sigma_z.
inline Mat2 axis_operator(const NoiseAxis& n) {
  const PauliSet& s = paulis();
  return s.sigma_x * Complex(n.nx()) + s.sigma_y * Complex(n.ny()) +
         s.sigma_z * Complex(n.nz());
}

/// Full parameterization of the noise process: with probability p the state
/// is left alone, otherwise the axis operator is applied to subsystem B.
class ChannelSpec {
 public:
  ChannelSpec(double p, const NoiseAxis& axis) : p_(p), axis_(axis) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("channel probability must lie in [0, 1]");
    }
  }

  double p() const { return p_; }
  const NoiseAxis& axis() const { return axis_; }

 private:
  double p_;
  NoiseAxis axis_;
};

inline DensityMatrix apply_channel(const DensityMatrix& rho,
                                   const ChannelSpec& spec) {
  const Mat4 flip = kron(paulis().identity, axis_operator(spec.axis()));
  const Mat4 out = rho.mat() * Complex(spec.p()) +
                   (flip * rho.mat() * flip) * Complex(1.0 - spec.p());
  return DensityMatrix(out);
}

/// n-fold composition of apply_channel; n = 0 returns the input unchanged.
/// Deliberately iterates the matrix arithmetic instead of shortcutting
/// through p_closed_form, so the two paths stay independent.
inline DensityMatrix iterate_channel(const DensityMatrix& rho,
                                     const ChannelSpec& spec, std::size_t n) {
  DensityMatrix state = rho;
  for (std::size_t i = 0; i < n; ++i) state = apply_channel(state, spec);
  return state;
}

/// Weight of the untouched component after n channel applications:
/// 1/2 + 2^(n-1) (p - 1/2)^n. For non-integer n the base is |p - 1/2|,
/// which keeps the expression real; every downstream entanglement
/// quantity depends only on |P - 1/2|, so the two conventions agree
/// wherever both are defined.
inline double p_closed_form(double p, double n) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("probability must lie in [0, 1]");
  }
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw ValidationError("application count must be finite and >= 0");
  }
  const double d = 2.0 * p - 1.0;
  const bool integral = std::floor(n) == n;
  const double base = integral ? d : std::abs(d);
  const double value = 0.5 + 0.5 * std::pow(base, n);
  return std::clamp(value, 0.0, 1.0);
}

/// The state P * rho_plus + (1 - P) * N(rho_plus) for the given axis; the
/// form every iterate of the channel keeps.
inline DensityMatrix mix_state(double weight, const NoiseAxis& axis) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ValidationError("mixing weight must lie in [0, 1]");
  }
  const Mat4 plus = singlet().mat();
  const Mat4 flip = kron(paulis().identity, axis_operator(axis));
  const Mat4 out =
      plus * Complex(weight) + (flip * plus * flip) * Complex(1.0 - weight);
  return DensityMatrix(out);
}

/// Unitary whose columns are the Bell states in the fixed order
/// Phi+, Phi-, Psi+, Psi- over the computational basis |00>,|01>,|10>,|11>.
inline const Mat4& bell_basis() {
  static const Mat4 basis = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 b;
    b(0, 0) = s;
    b(3, 0) = s;  // Phi+ = (|00> + |11>)/sqrt(2)
    b(0, 1) = s;
    b(3, 1) = -s;  // Phi- = (|00> - |11>)/sqrt(2)
    b(1, 2) = s;
    b(2, 2) = s;  // Psi+ = (|01> + |10>)/sqrt(2)
    b(1, 3) = s;
    b(2, 3) = -s;  // Psi- = (|01> - |10>)/sqrt(2)
    return b;
  }();
  return basis;
}

/// Probabilities over the Bell basis, ordered as in bell_basis().
struct BellDecomposition {
  std::array<double, 4> weights;
};

/// Diagonal Bell-basis weights of a Bell-diagonal state. States with any
/// Bell-basis off-diagonal element above tolerance are rejected, which
/// signals that the Bell-diagonal closed forms do not apply.
inline BellDecomposition bell_decompose(const DensityMatrix& rho) {
  const Mat4& b = bell_basis();
  const Mat4 w = b.adjoint() * rho.mat() * b;

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j && std::abs(w(i, j)) > bell_off_diagonal_tol) {
        throw StructureError("state is not Bell diagonal");
      }
    }
  }

  BellDecomposition out{};
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    out.weights[i] = std::max(w(i, i).real(), 0.0);
    sum += out.weights[i];
  }
  if (std::abs(sum - 1.0) > trace_tol) {
    throw ValidationError("Bell weights do not sum to one");
  }
  return out;
}

}  // namespace entdecay
