#pragma once

#include "zeno/model.hpp"

namespace zeno {

// Column-stacking convention throughout: vec(AXB) = (Bᵀ ⊗ A) vec(X).

Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v);

/// L_H = −i(I⊗H − Hᵀ⊗I), so that L_H vec(ρ) = vec(−i[H, ρ]).
/// Throws SchemaError if h is not Hermitian within 1e-10.
Superoperator hamiltonian_superop(const Matrix& h);

/// μ[V̄⊗V − ½ I⊗V†V − ½ (V†V)ᵀ⊗I]; throws MarkovianityError for rate < 0.
Superoperator dissipator_superop(const NoiseChannel& ch);

/// L_tot = L_{H0} + Σ_k dissipators.
Superoperator total_liouvillian(const SystemModel& model);

/// Scaling-and-squaring matrix exponential. Throws NumericalError (with the
/// input norm and estimated squaring depth) if the result is not finite.
Matrix expm(const Matrix& a);

/// devec(exp(L t) vec(ρ0)). Output is checked to be a density matrix within
/// 1e-9 (Hermiticity, trace, eigenvalues ≥ −1e-9).
Matrix propagate(const SystemModel& model, const Matrix& rho0, double t);

/// e^{−ω L_c η} · target · e^{ω L_c η} with L_c = hamiltonian_superop(hc),
/// computed as a product of superoperator exponentials.
Superoperator rotate_frame(const Superoperator& target, const Matrix& hc, double omega,
                           double eta);

/// max_j |(vec(I)† L)_j| — zero for trace-preserving generators.
double trace_preservation_defect(const Superoperator& l);

}  // namespace zeno
