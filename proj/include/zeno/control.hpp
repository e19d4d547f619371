#pragma once

#include <vector>

#include "zeno/model.hpp"

namespace zeno {

/// Control Hamiltonian hc applied with strength g = ω/τ over each interval.
struct ControlHamiltonian {
  Matrix hc;
  double omega = 0.0;
};

struct ResonanceViolation {
  int i = 0, j = 0;
  double gap = 0.0;       // E_i − E_j
  double residual = 0.0;  // distance of ω·gap from 2πZ
};

struct ResonanceReport {
  bool resonant = false;       // ω(E_i − E_j) ∈ 2πZ for all pairs
  bool rational_gaps = false;  // necessary condition ΔE_ij/ΔE_i'j' ∈ Q (denominators ≤ 64)
  std::vector<ResonanceViolation> violations;
};

ResonanceReport check_resonance(const ControlHamiltonian& ctrl, double tol = 1e-9);

/// exp(ω L_{Hc} + τ (L_μ + L_{H0})).
Superoperator controlled_propagator(const SystemModel& model, const ControlHamiltonian& ctrl,
                                    double tau);

double controlled_survival(const SystemModel& model, const ControlHamiltonian& ctrl,
                           const Vector& psi0, double tau);

/// Zeno-limit decay rate with resonant control:
/// γ = −∫₀¹ ⟨ψ0| L̃_μ^(η)[ρ0] |ψ0⟩ dη via Gauss–Legendre quadrature of rotated frames.
/// Throws ResonanceError if the control is off-resonance.
double zeno_limit_rate_controlled(const SystemModel& model, const ControlHamiltonian& ctrl,
                                  const Vector& psi0, int quadrature_order = 64);

/// Hamiltonian part of ∂_τ p_c at τ=0: ∫₀¹ ⟨ψ0| L̃_{H0}^(η)[ρ0] |ψ0⟩ dη.
/// Identically zero for resonant controls (commutator average).
double first_derivative_hamiltonian_part(const SystemModel& model,
                                         const ControlHamiltonian& ctrl, const Vector& psi0,
                                         int quadrature_order = 64);

/// Measurement-frequency threshold |(∂²_τ p_c − (∂_τ p_c)²)/(2 ∂_τ p_c)| at τ=0.
/// ∂²_τ p_c comes from the nested double η-integral (time-ordered expansion),
/// ∂_τ p_c from the single η-integral. Throws ConditionInapplicableError when
/// the first derivative vanishes, ResonanceError off-resonance.
double min_frequency_controlled(const SystemModel& model, const ControlHamiltonian& ctrl,
                                const Vector& psi0, int outer_order = 32, int inner_order = 32);

}  // namespace zeno
