#pragma once

#include "zeno/qubit.hpp"

namespace zeno {

struct OptimizationResult {
  double theta_opt = 0.0;
  double phi_opt = 0.0;
  double gamma_opt = 0.0;
  double kappa = 0.0;  // γ_opt/γ_free; analytic limit at γ_free = 0, NaN for numeric method
  bool hessian_ok = false;
  bool degenerate = false;
  enum class Method { analytic, numeric } method = Method::numeric;
};

/// Branch point α₀ = arccos(1/3) of the dephasing optimum.
double dephasing_branch_angle();

/// Optimal decay rates alone (β-independent closed forms, cheap enough for
/// quadrature fields).
double dephasing_optimal_rate(double alpha, double mu);
double ad_optimal_rate(double alpha, double mu);

/// Global minimum of rate_controlled_bloch over (θc, φc): coarse grid (ties broken
/// by smallest θc then φc) followed by Nelder–Mead refinement to 1e-12 in the rate.
OptimizationResult grid_oracle(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                               int n_theta = 64, int n_phi = 128);

/// Piecewise analytic dephasing optimum:
///   α < α₀:        θc = α/2,     φc = β,       γ = (μ/8)(5 − 2cosα − 3cos²α)
///   α₀ ≤ α ≤ π−α₀: θc = π/2,     φc = β + π/2, γ = μ/2
///   α > π−α₀:      θc = (π+α)/2, φc = β,       γ = (μ/8)(5 − 3cosα)(1 + cosα)
OptimizationResult optimal_dephasing(double alpha, double beta, double mu);

/// θc = α/2, φc = β, γ = (3/8)μ sin⁴(α/2), κ = 3/8 for every pure initial state.
OptimizationResult optimal_amplitude_damping(double alpha, double beta, double mu);

struct StationarityReport {
  double residual_theta = 0.0;
  double residual_phi = 0.0;
  bool hessian_ok = false;   // A > 0 and AC − B² > 0
  bool degenerate = false;   // flat direction (e.g. φ at a θ pole)
};

/// Richardson-extrapolated central differences (step 1e-5) of
/// rate_controlled_bloch in the control angles.
StationarityReport stationarity_check(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                                      const ControlDirection& nc);

/// Frobenius residual of the variational optimality equation, minimized over the
/// Lagrange multiplier Λ (least squares) and projected onto admissible variations
/// (δP_n real symmetric). ~0 at stationary control directions.
double variational_residual(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                            const Eigen::Vector3d& nc);

/// Minimal 2-D Nelder–Mead used by grid_oracle; exposed for reuse in tests.
struct SimplexResult {
  double x = 0.0, y = 0.0, value = 0.0;
  int iterations = 0;
};
SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f, double x0,
                             double y0, double step, double f_tol = 1e-12,
                             int max_iter = 400);

}  // namespace zeno
