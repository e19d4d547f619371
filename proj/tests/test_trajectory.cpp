#include <doctest.h>

#include "zeno/trajectory.hpp"
#include "zeno/zeno.hpp"

using namespace zeno;

namespace {

SystemModel dephasing_model(double mu, bool with_h0 = false) {
  SystemModel model;
  model.h0 = with_h0 ? Matrix(sigma_z()) : Matrix(Matrix::Zero(2, 2));
  model.channels = {{mu, Matrix(sigma_z())}};
  return model;
}

SystemModel ad_model(double mu) {
  Matrix jump = Matrix::Zero(2, 2);
  jump(0, 1) = 1.0;
  SystemModel model;
  model.h0 = sigma_z();
  model.channels = {{mu, jump}};
  return model;
}

ControlHamiltonian qubit_control(double theta, double phi) {
  return {Matrix(ControlDirection{theta, phi}.hamiltonian()), M_PI};
}

}  // namespace

TEST_CASE("interval path without control shrinks an equatorial state radially") {
  const Matrix rho0 = pure_density(state_from_angles(M_PI / 2, 0.0).cast<Complex>());
  const auto path = interval_path(dephasing_model(1.0), std::nullopt, 0.5, 10, rho0);
  REQUIRE(path.size() == 11);
  CHECK(path.front().bloch.x() == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t i = 1; i < path.size(); ++i) {
    CHECK(path[i].bloch.x() < path[i - 1].bloch.x());      // x decays
    CHECK(std::abs(path[i].bloch.y()) < 1e-12);            // y stays zero
    CHECK(std::abs(path[i].bloch.z()) < 1e-12);            // z preserved
    CHECK(path[i].time > path[i - 1].time);
    CHECK(path[i].bloch.norm() <= 1.0 + 1e-9);
  }
  // Closed form: rx(s) = e^{-2 mu s}.
  CHECK(path.back().bloch.x() == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("resonant control with no noise closes the loop") {
  SystemModel model;
  model.h0 = Matrix::Zero(2, 2);
  const Matrix rho0 = pure_density(state_from_angles(0.9, 0.2).cast<Complex>());
  const auto path = interval_path(model, qubit_control(1.3, 0.4), 0.1, 8, rho0);
  CHECK((path.back().bloch - path.front().bloch).norm() < 1e-10);
  CHECK(path.back().cumulative_survival == doctest::Approx(1.0).epsilon(1e-12));
  // Midway the state has genuinely moved.
  CHECK((path[4].bloch - path.front().bloch).norm() > 0.1);
}

TEST_CASE("cumulative survival is 1 until the measurement closes the interval") {
  const Matrix rho0 = pure_density(state_from_angles(M_PI / 2, 0.0).cast<Complex>());
  const SystemModel model = dephasing_model(1.0);
  const auto path = interval_path(model, std::nullopt, 0.2, 6, rho0);
  for (size_t i = 0; i + 1 < path.size(); ++i) CHECK(path[i].cumulative_survival == 1.0);
  const double p_tau =
      survival_probability(model, state_from_angles(M_PI / 2, 0.0).cast<Complex>(), 0.2);
  CHECK(path.back().cumulative_survival == doctest::Approx(p_tau).epsilon(1e-12));
}

TEST_CASE("amplitude damping: optimal control pulls the endpoint closer (tau = 0.25)") {
  const Matrix rho0 = pure_density(state_from_angles(M_PI, 0.0).cast<Complex>());
  const Eigen::Vector3d r_a = bloch_of_density(rho0);
  const auto free_path = interval_path(ad_model(1.0), std::nullopt, 0.25, 12, rho0);
  const auto ctrl_path =
      interval_path(ad_model(1.0), qubit_control(M_PI / 2, 0.0), 0.25, 12, rho0);
  CHECK((ctrl_path.back().bloch - r_a).norm() < (free_path.back().bloch - r_a).norm());
}

TEST_CASE("continued segment resumes where the interval ends") {
  const Matrix rho0 = pure_density(state_from_angles(1.2, 0.0).cast<Complex>());
  const SystemModel model = dephasing_model(1.0, true);
  const auto ctrl = qubit_control(0.6, 0.0);
  const auto actual = interval_path(model, ctrl, 0.05, 10, rho0);
  const auto continued = interval_path_range(model, ctrl, 0.05, 10, rho0, 0.05, 0.10);
  CHECK((continued.front().bloch - actual.back().bloch).norm() < 1e-12);
  CHECK(continued.front().time == doctest::Approx(0.05));
  CHECK(continued.back().time == doctest::Approx(0.10));
  for (const auto& s : continued) CHECK(s.cumulative_survival == 1.0);
}

TEST_CASE("protocol run") {
  const Vector psi0 = state_from_angles(M_PI / 2, 0.0).cast<Complex>();
  SUBCASE("per-cycle survival multiplies into the repeated-survival power law") {
    const SystemModel model = dephasing_model(1.0);
    const auto run = protocol_run(model, std::nullopt, 0.05, 0.5, psi0);
    REQUIRE(run.size() == 10);
    const double p_cycle = survival_probability(model, psi0, 0.05);
    for (size_t k = 0; k < run.size(); ++k) {
      CHECK(run[k].cumulative_survival ==
            doctest::Approx(repeated_survival(p_cycle, 0.05, (k + 1) * 0.05)).epsilon(1e-12));
      if (k > 0) CHECK(run[k].cumulative_survival < run[k - 1].cumulative_survival);
    }
  }
  SUBCASE("no noise, resonant control: 1 - O(tau^2) per cycle") {
    SystemModel model;
    model.h0 = sigma_z();
    const auto run = protocol_run(model, qubit_control(0.7, 0.1), 0.01, 0.1, psi0);
    for (const auto& s : run) CHECK(s.cumulative_survival > 1.0 - 1e-3);
  }
  SUBCASE("dephasing without control decays like e^{-mu t} in the Zeno regime") {
    const auto run = protocol_run(dephasing_model(1.0, true), std::nullopt, 0.01, 1.0, psi0);
    CHECK(run.back().cumulative_survival == doctest::Approx(std::exp(-1.0)).epsilon(0.02));
  }
  SUBCASE("the optimal control halves the exponent") {
    const auto run = protocol_run(dephasing_model(1.0, true), qubit_control(M_PI / 2, M_PI / 2),
                                  0.01, 1.0, psi0);
    CHECK(run.back().cumulative_survival == doctest::Approx(std::exp(-0.5)).epsilon(0.02));
  }
}
