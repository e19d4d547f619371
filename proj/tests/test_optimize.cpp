#include <doctest.h>

#include <random>

#include "zeno/optimize.hpp"

using namespace zeno;

namespace {

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double z = 2.0 * uni(rng) - 1.0;
  const double phi = 2.0 * M_PI * uni(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

TEST_CASE("grid oracle on amplitude damping") {
  for (double alpha : {0.5, M_PI / 2, 2.5}) {
    const auto res = grid_oracle(preset_amplitude_damping(1.0), bloch_from_angles(alpha, 0.0));
    const double s = std::sin(alpha / 2);
    CHECK(res.gamma_opt == doctest::Approx(0.375 * s * s * s * s).epsilon(1e-9));
    CHECK(res.theta_opt == doctest::Approx(alpha / 2).epsilon(1e-4));
    CHECK(res.kappa == doctest::Approx(0.375).epsilon(1e-6));
    CHECK(res.method == OptimizationResult::Method::numeric);
  }
}

TEST_CASE("grid oracle on dephasing at the equator") {
  const auto res = grid_oracle(preset_dephasing(1.0), bloch_from_angles(M_PI / 2, 0.0));
  CHECK(res.gamma_opt == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(res.theta_opt == doctest::Approx(M_PI / 2).epsilon(1e-4));
}

TEST_CASE("grid oracle on a flat landscape") {
  const auto res = grid_oracle(Eigen::Matrix3cd::Zero(), bloch_from_angles(1.0, 1.0));
  CHECK(res.gamma_opt == 0.0);
  CHECK(res.theta_opt == 0.0);  // tie-break: smallest grid point
  CHECK(res.phi_opt == 0.0);
  CHECK(std::isnan(res.kappa));  // gamma_free = 0 has no ratio
  CHECK(res.degenerate);
}

TEST_CASE("analytic dephasing optimum") {
  const double a0 = dephasing_branch_angle();
  SUBCASE("branch values and directions") {
    const auto low = optimal_dephasing(0.6, 0.3, 2.0);
    CHECK(low.theta_opt == doctest::Approx(0.3));
    CHECK(low.phi_opt == doctest::Approx(0.3));
    const auto mid = optimal_dephasing(M_PI / 2, 0.3, 2.0);
    CHECK(mid.gamma_opt == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mid.theta_opt == doctest::Approx(M_PI / 2));
    CHECK(mid.phi_opt == doctest::Approx(0.3 + M_PI / 2));
    const auto high = optimal_dephasing(2.9, 0.3, 2.0);
    CHECK(high.theta_opt == doctest::Approx((M_PI + 2.9) / 2));
  }
  SUBCASE("kappa at the branch point is 9/16; range is [1/2, 9/16]") {
    CHECK(optimal_dephasing(a0, 0.0, 1.0).kappa == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
    for (int i = 0; i < 200; ++i) {
      const double alpha = i * M_PI / 199;
      const double kappa = optimal_dephasing(alpha, 0.0, 1.0).kappa;
      CHECK(kappa >= 0.5 - 1e-12);
      CHECK(kappa <= 9.0 / 16.0 + 1e-12);
    }
    CHECK(optimal_dephasing(M_PI / 2, 0.0, 1.0).kappa == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("pole states are untouched") {
    CHECK(optimal_dephasing(0.0, 0.0, 1.0).gamma_opt == 0.0);
    CHECK(optimal_dephasing(M_PI, 0.0, 1.0).gamma_opt == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("continuity at both branch points") {
    for (double a : {a0, M_PI - a0}) {
      const double below = optimal_dephasing(a - 1e-12, 0.0, 1.0).gamma_opt;
      const double above = optimal_dephasing(a + 1e-12, 0.0, 1.0).gamma_opt;
      CHECK(std::abs(below - above) < 1e-11);
    }
  }
  SUBCASE("matches the grid oracle across alpha (spot grid; 512 points in verify)") {
    for (int i = 0; i < 64; ++i) {
      const double alpha = i * M_PI / 63;
      const auto ana = optimal_dephasing(alpha, 0.0, 1.0);
      const auto grid = grid_oracle(preset_dephasing(1.0), bloch_from_angles(alpha, 0.0));
      CHECK(std::abs(ana.gamma_opt - grid.gamma_opt) < 1e-8);
    }
  }
  SUBCASE("beta equivariance") {
    const auto base = optimal_dephasing(1.9, 0.0, 1.0);
    const auto shifted = optimal_dephasing(1.9, 0.7, 1.0);
    CHECK(shifted.phi_opt == doctest::Approx(base.phi_opt + 0.7).epsilon(1e-12));
    CHECK(shifted.gamma_opt == doctest::Approx(base.gamma_opt).epsilon(1e-12));
  }
}

TEST_CASE("oracle agreement holds across azimuths for both presets") {
  for (double beta : {0.0, 1.0, 2.5}) {
    for (int i = 0; i < 16; ++i) {
      const double alpha = i * M_PI / 15;
      const Eigen::Vector3d r0 = bloch_from_angles(alpha, beta);
      CHECK(std::abs(optimal_dephasing(alpha, beta, 1.0).gamma_opt -
                     grid_oracle(preset_dephasing(1.0), r0).gamma_opt) < 1e-8);
      CHECK(std::abs(optimal_amplitude_damping(alpha, beta, 1.0).gamma_opt -
                     grid_oracle(preset_amplitude_damping(1.0), r0).gamma_opt) < 1e-8);
    }
  }
}

TEST_CASE("analytic amplitude-damping optimum") {
  const auto res = optimal_amplitude_damping(M_PI, 0.0, 1.0);
  CHECK(res.gamma_opt == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(res.kappa == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(optimal_amplitude_damping(0.0, 0.0, 1.0).gamma_opt == 0.0);

  const auto mid = optimal_amplitude_damping(M_PI / 2, 0.0, 1.0);
  CHECK(mid.theta_opt == doctest::Approx(M_PI / 4));
  CHECK(mid.phi_opt == 0.0);
  CHECK(mid.gamma_opt == doctest::Approx(3.0 / 32.0).epsilon(1e-12));
  const auto grid = grid_oracle(preset_amplitude_damping(1.0), bloch_from_angles(M_PI / 2, 0.0));
  CHECK(std::abs(mid.gamma_opt - grid.gamma_opt) < 1e-9);
}

TEST_CASE("dominance: the optimum never exceeds the free rate") {
  for (int i = 0; i <= 100; ++i) {
    const double alpha = i * M_PI / 100;
    const Eigen::Vector3d r0 = bloch_from_angles(alpha, 0.0);
    CHECK(optimal_dephasing(alpha, 0.0, 1.0).gamma_opt <=
          rate_free_bloch(preset_dephasing(1.0), r0) + 1e-10);
    CHECK(optimal_amplitude_damping(alpha, 0.0, 1.0).gamma_opt <=
          rate_free_bloch(preset_amplitude_damping(1.0), r0) + 1e-10);
  }
}

TEST_CASE("stationarity check") {
  SUBCASE("AD optimum is a proper minimum away from the poles") {
    for (double alpha : {0.5, 1.5, 2.5}) {
      const auto rep =
          stationarity_check(preset_amplitude_damping(1.0), bloch_from_angles(alpha, 0.0),
                             ControlDirection{alpha / 2, 0.0});
      CHECK(rep.residual_theta < 1e-7);
      CHECK(rep.residual_phi < 1e-7);
      CHECK(rep.hessian_ok);
      CHECK_FALSE(rep.degenerate);
    }
  }
  SUBCASE("dephasing pole with a polar control is degenerate, not failed") {
    const auto rep = stationarity_check(preset_dephasing(1.0), bloch_from_angles(0.0, 0.0),
                                        ControlDirection{0.0, 0.0});
    CHECK(rep.degenerate);
    CHECK(rep.residual_theta < 1e-7);
  }
  SUBCASE("a random non-stationary direction has a visible residual") {
    std::mt19937_64 rng(41);
    int big = 0;
    for (int k = 0; k < 50; ++k) {
      const Eigen::Vector3d nc = random_unit(rng);
      const auto rep = stationarity_check(preset_amplitude_damping(1.0),
                                          bloch_from_angles(2.0, 0.0),
                                          ControlDirection{std::acos(nc.z()),
                                                           std::atan2(nc.y(), nc.x())});
      if (std::max(rep.residual_theta, rep.residual_phi) > 1e-3) ++big;
    }
    CHECK(big >= 48);
  }
}

TEST_CASE("variational residual") {
  const Eigen::Matrix3cd gad = preset_amplitude_damping(1.0);
  SUBCASE("vanishes at the AD optimum") {
    for (double alpha : {0.4, 1.2, 2.0, 2.9}) {
      CHECK(variational_residual(gad, bloch_from_angles(alpha, 0.5),
                                 bloch_from_angles(alpha / 2, 0.5)) < 1e-8);
    }
  }
  SUBCASE("vanishes at all three dephasing branches") {
    for (double alpha : {0.5, M_PI / 2, 2.8}) {
      const auto opt = optimal_dephasing(alpha, 0.2, 1.0);
      CHECK(variational_residual(preset_dephasing(1.0), bloch_from_angles(alpha, 0.2),
                                 bloch_from_angles(opt.theta_opt, opt.phi_opt)) < 1e-8);
    }
  }
  SUBCASE("trivial control at the AD south pole is stationary (a maximum)") {
    const Eigen::Vector3d south = bloch_from_angles(M_PI, 0.0);
    CHECK(variational_residual(gad, south, south) < 1e-8);
  }
  SUBCASE("random directions are flagged") {
    std::mt19937_64 rng(42);
    int flagged = 0;
    for (int k = 0; k < 1000; ++k) {
      if (variational_residual(gad, bloch_from_angles(2.0, 0.4), random_unit(rng)) > 1e-3)
        ++flagged;
    }
    CHECK(flagged >= 950);
  }
}

TEST_CASE("nelder-mead refines a quadratic basin") {
  const auto res = nelder_mead_2d(
      [](double x, double y) { return 3.0 + (x - 1.0) * (x - 1.0) + 2.0 * (y + 0.5) * (y + 0.5); },
      0.7, -0.2, 0.3);
  CHECK(res.x == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(res.y == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(res.value == doctest::Approx(3.0).epsilon(1e-12));
}
