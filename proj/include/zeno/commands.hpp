#pragma once

#include <iosfwd>
#include <string>

#include "zeno/config.hpp"

namespace zeno {

// Exit-code contract: 0 ok, 1 verification failure, 2 schema, 3 Markovianity,
// 4 resonance.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailure = 1,
  kSchemaViolation = 2,
  kMarkovianityViolation = 3,
  kResonanceViolation = 4,
};

/// JSON report {gamma_free, gamma_controlled?, kappa?, min_frequency?}.
std::string cmd_rate(const RunConfig& config);

/// CSV: alpha,gamma_free,gamma_opt,kappa,theta_opt,phi_opt over an α grid on [0, π].
std::string cmd_sweep_alpha(const RunConfig& config, int n_points);

/// CSV: t,F_free,F_opt on a uniform t grid [0, config.t].
std::string cmd_fidelity(const RunConfig& config, int n_points);

/// CSV: segment,step,time,rx,ry,rz,cumulative_survival with
/// segment ∈ {actual, continued, free}.
std::string cmd_trajectory(const RunConfig& config, int n_steps);

/// Full oracle suite; one pass/fail line per check. Returns true iff all pass.
bool cmd_verify(std::ostream& out);

/// Worker-thread count: ZENO_CTL_THREADS or the hardware concurrency.
int worker_thread_count();

}  // namespace zeno
