#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "zeno/commands.hpp"

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw zeno::SchemaError("cannot open output file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Zeno effect decay rates and coherent-control optimization"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  int points_sweep = 181, points_fidelity = 50, steps = 64;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("--config", config_path, "JSON run configuration")->required();
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  auto* rate = app.add_subcommand("rate", "decay rates for one configuration (JSON report)");
  add_common(rate, true);

  auto* sweep = app.add_subcommand("sweep-alpha", "optimum sweep over the polar angle (CSV)");
  add_common(sweep, true);
  sweep->add_option("--points", points_sweep, "number of alpha grid points")
      ->check(CLI::PositiveNumber);

  auto* fid = app.add_subcommand("fidelity", "ensemble-average fidelity curves (CSV)");
  add_common(fid, true);
  fid->add_option("--points", points_fidelity, "number of time grid points")
      ->check(CLI::PositiveNumber);

  auto* traj = app.add_subcommand("trajectory", "Bloch evolution paths (CSV)");
  add_common(traj, true);
  traj->add_option("--steps", steps, "samples per interval")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the full cross-validation suite");
  add_common(verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      return zeno::cmd_verify(std::cout) ? zeno::kOk : zeno::kVerifyFailure;
    }
    const zeno::RunConfig config = zeno::load_config(config_path);
    std::string output;
    if (rate->parsed()) output = zeno::cmd_rate(config);
    if (sweep->parsed()) output = zeno::cmd_sweep_alpha(config, points_sweep);
    if (fid->parsed()) output = zeno::cmd_fidelity(config, points_fidelity);
    if (traj->parsed()) output = zeno::cmd_trajectory(config, steps);
    write_output(output, out_path);
    return zeno::kOk;
  } catch (const zeno::MarkovianityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zeno::kMarkovianityViolation;
  } catch (const zeno::ResonanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zeno::kResonanceViolation;
  } catch (const zeno::SchemaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zeno::kSchemaViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return zeno::kSchemaViolation;
  }
}
