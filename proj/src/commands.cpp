#include "zeno/commands.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "zeno/control.hpp"
#include "zeno/fidelity.hpp"
#include "zeno/optimize.hpp"
#include "zeno/trajectory.hpp"
#include "zeno/verify.hpp"
#include "zeno/zeno.hpp"

namespace zeno {

namespace {

// Locale-independent, 15 significant digits, widened (16/17) only when the
// shorter form would not parse back to the same double.
std::string format_number(double v) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
    double parsed = 0.0;
    std::from_chars(buf, res.ptr, parsed);
    if (parsed == v || precision == 17) return std::string(buf, res.ptr);
  }
  return {};
}

void parallel_for(int n, const std::function<void(int)>& body) {
  const int workers = std::min(worker_thread_count(), std::max(1, n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

OptimizationResult preset_optimum(const PresetSpec& preset, double alpha, double beta) {
  return preset.type == PresetSpec::Type::dephasing
             ? optimal_dephasing(alpha, beta, preset.mu)
             : optimal_amplitude_damping(alpha, beta, preset.mu);
}

double preset_free_rate(const PresetSpec& preset, double alpha) {
  const double s = std::sin(alpha);
  if (preset.type == PresetSpec::Type::dephasing) return preset.mu * s * s;
  const double sh = std::sin(alpha / 2.0);
  return preset.mu * sh * sh * sh * sh;
}

}  // namespace

int worker_thread_count() {
  if (const char* env = std::getenv("ZENO_CTL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

std::string cmd_rate(const RunConfig& config) {
  const SystemModel model = config.system_model();
  const Vector psi0 = config.initial_state();

  nlohmann::json report;
  report["gamma_free"] = zeno_limit_rate_free(model, psi0);

  if (config.control) {
    const ControlHamiltonian ctrl = config.control_hamiltonian();
    const double gc = zeno_limit_rate_controlled(model, ctrl, psi0);
    report["gamma_controlled"] = gc;
    if (report["gamma_free"].get<double>() > 0.0)
      report["kappa"] = gc / report["gamma_free"].get<double>();
    try {
      report["min_frequency"] = min_frequency_controlled(model, ctrl, psi0);
    } catch (const ConditionInapplicableError&) {
    }
  } else {
    try {
      report["min_frequency"] = min_frequency_free(model, psi0);
    } catch (const ConditionInapplicableError&) {
    }
  }
  return report.dump(2) + "\n";
}

std::string cmd_sweep_alpha(const RunConfig& config, int n_points) {
  if (!config.preset) throw SchemaError("sweep-alpha: a preset config is required");
  if (n_points < 1) throw SchemaError("sweep-alpha: need at least one point");

  // Preset rates are beta-independent and phi_opt is beta-equivariant; beta = 0.
  std::vector<std::string> rows(n_points);
  parallel_for(n_points, [&](int i) {
    const double alpha = n_points == 1 ? 0.0 : i * M_PI / (n_points - 1);
    const auto opt = preset_optimum(*config.preset, alpha, 0.0);
    const double gamma_free = preset_free_rate(*config.preset, alpha);
    std::ostringstream row;
    row << format_number(alpha) << ',' << format_number(gamma_free) << ','
        << format_number(opt.gamma_opt) << ',' << format_number(opt.kappa) << ','
        << format_number(opt.theta_opt) << ',' << format_number(opt.phi_opt) << '\n';
    rows[i] = row.str();
  });

  std::string csv = "alpha,gamma_free,gamma_opt,kappa,theta_opt,phi_opt\n";
  for (const auto& row : rows) csv += row;
  return csv;
}

std::string cmd_fidelity(const RunConfig& config, int n_points) {
  if (!config.preset) throw SchemaError("fidelity: a preset config is required");
  if (n_points < 2) throw SchemaError("fidelity: need at least two time points");
  if (config.t <= 0.0) throw SchemaError("fidelity: config 't' must be positive");

  const PresetSpec preset = *config.preset;
  const RateField free_field{[preset](double a, double) { return preset_free_rate(preset, a); },
                             RateField::Kind::free_rate,
                             {}};
  // The dephasing optimum is piecewise with kinks at cos(alpha) = +-1/3.
  const bool dephasing = preset.type == PresetSpec::Type::dephasing;
  const RateField opt_field{[preset, dephasing](double a, double) {
                              return dephasing ? dephasing_optimal_rate(a, preset.mu)
                                               : ad_optimal_rate(a, preset.mu);
                            },
                            RateField::Kind::controlled_optimal,
                            dephasing ? std::vector<double>{-1.0 / 3.0, 1.0 / 3.0}
                                      : std::vector<double>{}};

  std::vector<std::string> rows(n_points);
  parallel_for(n_points, [&](int i) {
    const double t = config.t * i / (n_points - 1);
    const double f_free = ensemble_fidelity(free_field, t);
    const double f_opt = ensemble_fidelity(opt_field, t);
    std::ostringstream row;
    row << format_number(t) << ',' << format_number(f_free) << ',' << format_number(f_opt)
        << '\n';
    rows[i] = row.str();
  });

  std::string csv = "t,F_free,F_opt\n";
  for (const auto& row : rows) csv += row;
  return csv;
}

std::string cmd_trajectory(const RunConfig& config, int n_steps) {
  if (config.tau <= 0.0) throw SchemaError("trajectory: config 'tau' must be positive");
  const SystemModel model = config.system_model();
  const Matrix rho0 = pure_density(config.initial_state());

  std::optional<ControlHamiltonian> ctrl;
  if (config.control) ctrl = config.control_hamiltonian();

  std::string csv = "segment,step,time,rx,ry,rz,cumulative_survival\n";
  auto emit = [&](const char* segment, const std::vector<PathSample>& path) {
    for (const auto& s : path) {
      csv += segment;
      csv += ',' + std::to_string(s.step) + ',' + format_number(s.time) + ',' +
             format_number(s.bloch.x()) + ',' + format_number(s.bloch.y()) + ',' +
             format_number(s.bloch.z()) + ',' + format_number(s.cumulative_survival) + '\n';
    }
  };
  emit("actual", interval_path(model, ctrl, config.tau, n_steps, rho0));
  emit("continued", interval_path_range(model, ctrl, config.tau, n_steps, rho0, config.tau,
                                        2.0 * config.tau));
  emit("free", interval_path(model, std::nullopt, config.tau, n_steps, rho0));
  return csv;
}

bool cmd_verify(std::ostream& out) {
  bool all_pass = true;
  for (const auto& check : verify::checks()) {
    verify::CheckResult result;
    try {
      result = check.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    out << (result.pass ? "PASS" : "FAIL") << "  " << check.name;
    if (!result.detail.empty()) out << "  [" << result.detail << "]";
    out << '\n';
    all_pass = all_pass && result.pass;
  }
  out << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
  return all_pass;
}

}  // namespace zeno
