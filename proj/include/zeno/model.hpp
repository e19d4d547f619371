#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A d²×d² complex matrix acting on column-stacked density matrices.
using Superoperator = Eigen::MatrixXcd;

constexpr double kHermitianTol = 1e-12;
constexpr double kInputEigTol = -1e-10;

/// max |A - A†| entrywise.
double hermiticity_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = kHermitianTol);

/// Throws SchemaError unless rho is square, Hermitian (1e-12), unit trace (1e-12)
/// and PSD up to the eigenvalue tolerance.
void validate_density_matrix(const Matrix& rho, double herm_tol = kHermitianTol,
                             double eig_tol = kInputEigTol);

/// ρ = |ψ⟩⟨ψ| for a normalized state vector.
Matrix pure_density(const Vector& psi);

/// Throws SchemaError unless ‖ψ‖ = 1 within 1e-12.
void validate_state(const Vector& psi);

/// One Markovian noise channel: rate μ ≥ 0 and jump operator V.
struct NoiseChannel {
  double rate = 0.0;
  Matrix jump;
};

/// Free Hamiltonian plus noise channels, sharing one Hilbert-space dimension.
struct SystemModel {
  Matrix h0;
  std::vector<NoiseChannel> channels;

  Eigen::Index dim() const { return h0.rows(); }

  /// Throws SchemaError on shape mismatch / non-Hermitian h0,
  /// MarkovianityError on a negative rate.
  void validate() const;
};

}  // namespace zeno
