#pragma once

#include <optional>
#include <vector>

#include "zeno/control.hpp"
#include "zeno/qubit.hpp"

namespace zeno {

struct PathSample {
  int step = 0;
  double time = 0.0;
  Eigen::Vector3d bloch = Eigen::Vector3d::Zero();
  double cumulative_survival = 1.0;
};

/// Bloch path over one measurement interval, sampled at s = k·τ/n_steps.
/// The control strength g = ω/τ is fixed by the full interval, so the partial
/// propagator is exp((s/τ)(ω L_c + τ L₀)). cumulative_survival is 1 until the
/// measurement at s = τ, where it becomes p(τ). Qubit models only.
std::vector<PathSample> interval_path(const SystemModel& model,
                                      const std::optional<ControlHamiltonian>& ctrl, double tau,
                                      int n_steps, const Matrix& rho0);

/// Same generator continued past the measurement time over s ∈ [s_begin, s_end]
/// with no measurement (cumulative_survival stays 1).
std::vector<PathSample> interval_path_range(const SystemModel& model,
                                            const std::optional<ControlHamiltonian>& ctrl,
                                            double tau, int n_steps, const Matrix& rho0,
                                            double s_begin, double s_end);

/// Full repeated-measurement run: per cycle evolve τ, record the pre-measurement
/// Bloch vector and the running survival product, then reset to ρ0.
std::vector<PathSample> protocol_run(const SystemModel& model,
                                     const std::optional<ControlHamiltonian>& ctrl, double tau,
                                     double t, const Vector& psi0);

}  // namespace zeno
