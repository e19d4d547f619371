#pragma once

#include <Eigen/Dense>

#include "zeno/model.hpp"

namespace zeno {

// Basis convention: σz|0⟩ = +|0⟩, so |0⟩ is the north pole of the Bloch
// sphere and the amplitude-damping jump |0⟩⟨1| makes |0⟩ stationary.
// Pauli index order (x, y, z) ↔ (1, 2, 3).

const Eigen::Matrix2cd& sigma_x();
const Eigen::Matrix2cd& sigma_y();
const Eigen::Matrix2cd& sigma_z();

/// r = (sinα cosβ, sinα sinβ, cosα).
Eigen::Vector3d bloch_from_angles(double alpha, double beta);

/// |ψ⟩ = cos(α/2)|0⟩ + e^{iβ} sin(α/2)|1⟩.
Eigen::Vector2cd state_from_angles(double alpha, double beta);

/// Pure state for a unit Bloch vector; throws SchemaError if ‖r‖ ≠ 1 within 1e-12.
Eigen::Vector2cd state_from_bloch(const Eigen::Vector3d& r);

Eigen::Vector3d bloch_of_density(const Eigen::Matrix2cd& rho);

/// n·σ for a unit vector n.
Eigen::Matrix2cd pauli_along(const Eigen::Vector3d& n);

/// Control direction angles; axis() is exactly unit by construction.
struct ControlDirection {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::Vector3d axis() const;
  Eigen::Matrix2cd hamiltonian() const { return pauli_along(axis()); }
};

/// ν = 2(Im Γ₂₃, Im Γ₃₁, Im Γ₁₂).
Eigen::Vector3d nu_from_gamma(const Eigen::Matrix3cd& gamma);

/// Γ_z = diag(0, 0, μ).
Eigen::Matrix3cd preset_dephasing(double mu);

/// Γ_ad = (μ/4) [[1, −i, 0], [i, 1, 0], [0, 0, 0]].
Eigen::Matrix3cd preset_amplitude_damping(double mu);

/// Hermitian within 1e-12 and PSD (min eigenvalue ≥ −1e-10); throws otherwise.
void validate_gamma(const Eigen::Matrix3cd& gamma);

/// Eigendecompose Γ = Σ λ_m u_m u_m†; channel m has jump Σ_i (u_m)_i σ_i rescaled
/// to unit spectral norm with the scale folded into the rate. Zero modes dropped.
std::vector<NoiseChannel> gamma_to_channels(const Eigen::Matrix3cd& gamma);

/// SystemModel with the Γ channels and an optional free Hamiltonian.
SystemModel model_from_gamma(const Eigen::Matrix3cd& gamma,
                             const Eigen::Matrix2cd& h0 = Eigen::Matrix2cd::Zero());

/// γ^(n) = −r0ᵀΓr0 + TrΓ + ν·r0 for a pure Bloch vector (‖r0‖ = 1 required).
double rate_free_bloch(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0);

/// Closed-form controlled rate for resonant ω = nπ:
/// γ^(c) = −(3/2)(nc·r0)² ncᵀΓnc + ½(nc·r0)(ncᵀΓr0 + r0ᵀΓnc) − ½ r0ᵀΓr0
///         − ½ (nc×r0)ᵀΓ(nc×r0) + TrΓ + (nc·r0)(ν·nc).
double rate_controlled_bloch(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                             const Eigen::Vector3d& nc);

/// Trigonometric closed forms of the controlled rate for the two presets
/// (Δ = β − φc). Equal to rate_controlled_bloch on the matching preset.
double dephasing_rate_controlled(double alpha, double beta, double theta_c, double phi_c,
                                 double mu);
double ad_rate_controlled(double alpha, double beta, double theta_c, double phi_c, double mu);

}  // namespace zeno
