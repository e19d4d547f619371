#include "zeno/trajectory.hpp"

#include <cmath>

#include "zeno/liouville.hpp"
#include "zeno/zeno.hpp"

namespace zeno {

namespace {

Superoperator interval_exponent(const SystemModel& model,
                                const std::optional<ControlHamiltonian>& ctrl, double tau) {
  Superoperator exponent = tau * total_liouvillian(model);
  if (ctrl) exponent += ctrl->omega * hamiltonian_superop(ctrl->hc);
  return exponent;
}

}  // namespace

std::vector<PathSample> interval_path_range(const SystemModel& model,
                                            const std::optional<ControlHamiltonian>& ctrl,
                                            double tau, int n_steps, const Matrix& rho0,
                                            double s_begin, double s_end) {
  if (model.dim() != 2) throw SchemaError("interval_path: Bloch paths require dimension 2");
  if (n_steps < 2) throw SchemaError("interval_path: n_steps must be >= 2");
  if (tau <= 0.0) throw SchemaError("interval_path: tau must be positive");
  validate_density_matrix(rho0);

  // g = omega/tau is pinned by the full interval, so progress s applies the
  // fraction s/tau of the whole exponent.
  const Superoperator exponent = interval_exponent(model, ctrl, tau);
  const Vector v0 = vectorize(rho0);

  std::vector<PathSample> path;
  path.reserve(n_steps + 1);
  for (int k = 0; k <= n_steps; ++k) {
    const double s = s_begin + (s_end - s_begin) * k / n_steps;
    const Matrix rho_s = devectorize(expm((s / tau) * exponent) * v0);
    PathSample sample;
    sample.step = k;
    sample.time = s;
    sample.bloch = bloch_of_density(rho_s);
    sample.cumulative_survival = 1.0;
    path.push_back(sample);
  }
  return path;
}

std::vector<PathSample> interval_path(const SystemModel& model,
                                      const std::optional<ControlHamiltonian>& ctrl, double tau,
                                      int n_steps, const Matrix& rho0) {
  auto path = interval_path_range(model, ctrl, tau, n_steps, rho0, 0.0, tau);
  // The projective measurement at s = tau collapses the running survival to p(tau).
  const Matrix rho_tau =
      devectorize(expm(interval_exponent(model, ctrl, tau)) * vectorize(rho0));
  path.back().cumulative_survival = (rho0 * rho_tau).trace().real();
  return path;
}

std::vector<PathSample> protocol_run(const SystemModel& model,
                                     const std::optional<ControlHamiltonian>& ctrl, double tau,
                                     double t, const Vector& psi0) {
  if (model.dim() != 2) throw SchemaError("protocol_run: Bloch paths require dimension 2");
  if (tau <= 0.0) throw SchemaError("protocol_run: tau must be positive");
  if (t < tau) throw SchemaError("protocol_run: total time must cover at least one interval");
  validate_state(psi0);

  const Matrix rho0 = pure_density(psi0);
  const Superoperator propagator = expm(interval_exponent(model, ctrl, tau));
  const int cycles = int(std::floor(t / tau + 1e-9));

  std::vector<PathSample> samples;
  samples.reserve(cycles);
  double cumulative = 1.0;
  for (int k = 1; k <= cycles; ++k) {
    // Survival branch: evolve one interval from rho0, measure, reset.
    const Matrix rho_tau = devectorize(propagator * vectorize(rho0));
    const double p_cycle =
        std::min(1.0, std::max(0.0, (rho0 * rho_tau).trace().real()));
    cumulative *= p_cycle;
    PathSample sample;
    sample.step = k;
    sample.time = k * tau;
    sample.bloch = bloch_of_density(rho_tau);
    sample.cumulative_survival = cumulative;
    samples.push_back(sample);
  }
  return samples;
}

}  // namespace zeno
