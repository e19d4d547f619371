#pragma once

#include "zeno/model.hpp"

namespace zeno {

/// Repeated-projective-measurement protocol: interval τ, total duration, initial state.
struct ZenoProtocol {
  double tau = 0.0;
  double total_time = 0.0;
  Vector psi0;

  void validate() const;
};

/// Survival readout for one protocol: p(τ), γ_eff(τ) and P(t) = e^{−γ_eff t}.
struct DecayEstimate {
  double p_tau = 1.0;
  double gamma_eff = 0.0;
  double survival_total = 1.0;
};

DecayEstimate estimate_decay(const SystemModel& model, const ZenoProtocol& protocol);

/// ⟨ψ0| e^{L τ}[|ψ0⟩⟨ψ0|] |ψ0⟩, clamped to [0,1] after a 1e-10 consistency check.
double survival_probability(const SystemModel& model, const Vector& psi0, double tau);

/// γ_eff(τ) = −ln p(τ)/τ. Rates in [−1e-12, 0) are clamped to 0.
double effective_rate(double p_tau, double tau);

/// P(t) = p(τ)^{t/τ} with a real exponent (non-integer cycle counts allowed).
double repeated_survival(double p_tau, double tau, double t);

/// Noiseless small-τ reference: 1 − τ²(⟨H²⟩ − ⟨H⟩²).
double quadratic_decay_check(const Matrix& h, const Vector& psi0, double tau);

/// Zeno-limit decay rate without control:
/// Σ_k μ_k [⟨V_k†V_k⟩ − ⟨V_k†⟩⟨V_k⟩], always ≥ 0 (Cauchy–Schwarz).
double zeno_limit_rate_free(const SystemModel& model, const Vector& psi0);

/// First-order coefficient of γ_eff(τ): −½⟨Δ²L⟩ with L = L_{H0}+L_μ and Liouville-space
/// moments ⟨L^k⟩ = vec(ρ0)† L^k vec(ρ0). May have either sign (L is not Hermitian).
double first_order_coefficient_free(const SystemModel& model, const Vector& psi0);

/// Measurement-frequency threshold |⟨Δ²L⟩ / (2⟨L_μ⟩)| above which the rate is
/// τ-independent. Throws ConditionInapplicableError when ⟨L_μ⟩ = 0.
double min_frequency_free(const SystemModel& model, const Vector& psi0);

}  // namespace zeno
