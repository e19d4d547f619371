#include "zeno/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "zeno/optimize.hpp"

namespace zeno {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    std::ostringstream os;
    os << what << ": complex entries must be [re, im] pairs";
    throw SchemaError(os.str());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Matrix parse_matrix(const json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || int(j.size()) != rows) {
    std::ostringstream os;
    os << what << ": expected " << rows << " rows";
    throw SchemaError(os.str());
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != cols) {
      std::ostringstream os;
      os << what << ": row " << r << " must have " << cols << " [re, im] pairs";
      throw SchemaError(os.str());
    }
    for (int c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c], what);
  }
  return m;
}

Vector parse_vector(const json& j, int size, const char* what) {
  if (!j.is_array() || int(j.size()) != size) {
    std::ostringstream os;
    os << what << ": expected " << size << " [re, im] pairs";
    throw SchemaError(os.str());
  }
  Vector v(size);
  for (int i = 0; i < size; ++i) v[i] = parse_complex(j[i], what);
  return v;
}

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    std::ostringstream os;
    os << "config: missing or non-numeric field '" << key << "'";
    throw SchemaError(os.str());
  }
  return j[key].get<double>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("config: top level must be an object");

  RunConfig cfg;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw SchemaError("config: 'dimension' (integer) is required");
  cfg.dimension = j["dimension"].get<int>();
  if (cfg.dimension < 2 || cfg.dimension > 8)
    throw SchemaError("config: dimension must be in [2, 8]");

  cfg.h0 = j.contains("h0") ? parse_matrix(j["h0"], cfg.dimension, cfg.dimension, "h0")
                            : Matrix::Zero(cfg.dimension, cfg.dimension);

  const int noise_sources =
      int(j.contains("channels")) + int(j.contains("gamma")) + int(j.contains("preset"));
  if (noise_sources != 1)
    throw SchemaError("config: exactly one of {channels, gamma, preset} must be supplied");

  if (j.contains("channels")) {
    if (!j["channels"].is_array()) throw SchemaError("config: 'channels' must be an array");
    std::vector<NoiseChannel> channels;
    for (const auto& cj : j["channels"]) {
      NoiseChannel ch;
      ch.rate = require_number(cj, "rate");
      if (!cj.contains("v")) throw SchemaError("config: channel missing jump operator 'v'");
      ch.jump = parse_matrix(cj["v"], cfg.dimension, cfg.dimension, "channel v");
      channels.push_back(std::move(ch));
    }
    cfg.channels = std::move(channels);
  }
  if (j.contains("gamma")) {
    if (cfg.dimension != 2) throw SchemaError("config: 'gamma' requires dimension 2");
    cfg.gamma = Eigen::Matrix3cd(parse_matrix(j["gamma"], 3, 3, "gamma"));
  }
  if (j.contains("preset")) {
    if (cfg.dimension != 2) throw SchemaError("config: 'preset' requires dimension 2");
    const auto& pj = j["preset"];
    if (!pj.contains("type") || !pj["type"].is_string())
      throw SchemaError("config: preset needs a 'type' string");
    const std::string type = pj["type"].get<std::string>();
    PresetSpec preset;
    if (type == "dephasing") {
      preset.type = PresetSpec::Type::dephasing;
    } else if (type == "amplitude_damping") {
      preset.type = PresetSpec::Type::amplitude_damping;
    } else {
      throw SchemaError("config: preset type must be 'dephasing' or 'amplitude_damping'");
    }
    preset.mu = require_number(pj, "mu");
    if (preset.mu < 0.0) throw MarkovianityError("config: preset intensity must be >= 0");
    cfg.preset = preset;
  }

  if (j.contains("psi0")) cfg.psi0 = parse_vector(j["psi0"], cfg.dimension, "psi0");

  if (j.contains("control")) {
    if (cfg.dimension != 2)
      throw SchemaError("config: 'control' direction angles require dimension 2");
    const auto& cj = j["control"];
    ControlSpec ctrl;
    ctrl.theta = require_number(cj, "theta");
    ctrl.phi = require_number(cj, "phi");
    if (!cj.contains("omega_multiple") || !cj["omega_multiple"].is_number_integer())
      throw SchemaError("config: control needs integer 'omega_multiple'");
    ctrl.omega_multiple = cj["omega_multiple"].get<int>();
    if (ctrl.omega_multiple == 0)
      throw SchemaError("config: control omega_multiple must be a nonzero integer");
    cfg.control = ctrl;
  }

  if (j.contains("tau")) cfg.tau = require_number(j, "tau");
  if (j.contains("t")) cfg.t = require_number(j, "t");
  if (cfg.tau < 0.0 || cfg.t < 0.0) throw SchemaError("config: times must be non-negative");

  // Re-check module invariants eagerly so malformed configs fail at load time.
  cfg.system_model().validate();
  if (cfg.psi0) validate_state(*cfg.psi0);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

SystemModel RunConfig::system_model() const {
  SystemModel model;
  model.h0 = h0;
  if (channels) {
    model.channels = *channels;
  } else {
    model.channels = gamma_to_channels(gamma_matrix());
  }
  model.validate();
  return model;
}

Eigen::Matrix3cd RunConfig::gamma_matrix() const {
  if (gamma) {
    validate_gamma(*gamma);
    return *gamma;
  }
  if (preset) {
    return preset->type == PresetSpec::Type::dephasing
               ? preset_dephasing(preset->mu)
               : preset_amplitude_damping(preset->mu);
  }
  throw SchemaError("config: no gamma-matrix form available for channel configs");
}

ControlHamiltonian RunConfig::control_hamiltonian() const {
  const ControlDirection dir = control_direction();
  return {Matrix(dir.hamiltonian()), control->omega_multiple * M_PI};
}

ControlDirection RunConfig::control_direction() const {
  if (!control) throw SchemaError("config: no control specified");
  return {control->theta, control->phi};
}

Vector RunConfig::initial_state() const {
  if (!psi0) throw SchemaError("config: 'psi0' is required for this command");
  validate_state(*psi0);
  return *psi0;
}

double RunConfig::initial_alpha() const {
  if (dimension != 2) throw SchemaError("config: Bloch angles require dimension 2");
  const Eigen::Vector3d r = bloch_of_density(pure_density(initial_state()));
  return std::acos(std::clamp(r.z(), -1.0, 1.0));
}

double RunConfig::initial_beta() const {
  if (dimension != 2) throw SchemaError("config: Bloch angles require dimension 2");
  const Eigen::Vector3d r = bloch_of_density(pure_density(initial_state()));
  if (std::abs(r.x()) < 1e-14 && std::abs(r.y()) < 1e-14) return 0.0;
  const double beta = std::atan2(r.y(), r.x());
  return beta < 0.0 ? beta + 2.0 * M_PI : beta;
}

}  // namespace zeno
