#pragma once

#include <optional>
#include <string>

#include "zeno/control.hpp"
#include "zeno/model.hpp"
#include "zeno/qubit.hpp"

namespace zeno {

struct PresetSpec {
  enum class Type { dephasing, amplitude_damping } type = Type::dephasing;
  double mu = 0.0;
};

struct ControlSpec {
  double theta = 0.0;
  double phi = 0.0;
  int omega_multiple = 1;  // ω = n·π (qubit)
};

/// Parsed run configuration. Exactly one of {channels, gamma, preset} describes
/// the noise; complex entries are [re, im] pairs, matrices row-major.
struct RunConfig {
  int dimension = 2;
  Matrix h0;  // zero matrix when omitted
  std::optional<std::vector<NoiseChannel>> channels;
  std::optional<Eigen::Matrix3cd> gamma;
  std::optional<PresetSpec> preset;
  std::optional<Vector> psi0;
  std::optional<ControlSpec> control;
  double tau = 0.0;
  double t = 0.0;

  /// Noise model in channel form (gamma/preset are decomposed). Re-checks all
  /// module-level invariants; throws SchemaError/MarkovianityError.
  SystemModel system_model() const;

  /// Γ matrix of the noise (presets/gamma); SchemaError for channel configs.
  Eigen::Matrix3cd gamma_matrix() const;

  bool has_preset() const { return preset.has_value(); }

  /// Control Hamiltonian ω = n·π, hc = n_c·σ; SchemaError if no control given.
  ControlHamiltonian control_hamiltonian() const;
  ControlDirection control_direction() const;

  Vector initial_state() const;  // SchemaError when psi0 missing
  double initial_alpha() const;  // polar angle of psi0's Bloch vector (qubit)
  double initial_beta() const;
};

/// Parse + validate a JSON config (schema errors throw SchemaError).
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

}  // namespace zeno
