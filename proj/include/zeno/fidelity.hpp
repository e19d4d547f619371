#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace zeno {

/// Decay rate as a function of the initial-state angles (α, β).
/// Piecewise fields list their kink locations in u = cosα so the quadrature
/// can integrate each smooth piece separately.
struct RateField {
  std::function<double(double alpha, double beta)> rate;
  enum class Kind { free_rate, controlled_optimal, controlled_fixed } kind = Kind::free_rate;
  std::vector<double> cos_alpha_breakpoints;
};

/// F(t) = (1/4π) ∫dβ ∫dα e^{−γ(α,β) t} sinα over the pure-state sphere.
/// Gauss–Legendre in u = cosα (n_alpha nodes per smooth piece) × trapezoid in β
/// (n_beta nodes).
double ensemble_fidelity(const RateField& field, double t, int n_alpha = 64, int n_beta = 128);

/// F evaluated on a sorted t grid; non-increasing in t.
std::vector<std::pair<double, double>> fidelity_curve(const RateField& field,
                                                      const std::vector<double>& t_grid,
                                                      int n_alpha = 64, int n_beta = 128);

}  // namespace zeno
