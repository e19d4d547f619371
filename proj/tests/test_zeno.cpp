#include <doctest.h>

#include <random>

#include "zeno/liouville.hpp"
#include "zeno/qubit.hpp"
#include "zeno/zeno.hpp"

using namespace zeno;

namespace {

SystemModel dephasing_model(double mu) {
  SystemModel model;
  model.h0 = Matrix::Zero(2, 2);
  model.channels = {{mu, Matrix(sigma_z())}};
  return model;
}

SystemModel ad_model(double mu) {
  Matrix jump = Matrix::Zero(2, 2);
  jump(0, 1) = 1.0;
  SystemModel model;
  model.h0 = Matrix::Zero(2, 2);
  model.channels = {{mu, jump}};
  return model;
}

Vector plus_state() { return state_from_angles(M_PI / 2, 0.0).cast<Complex>(); }

SystemModel random_qubit_model(std::mt19937_64& rng, bool with_h0 = true) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix3cd a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::Matrix3cd g = a * a.adjoint();
  g /= g.trace().real();
  Eigen::Matrix2cd h0 = Eigen::Matrix2cd::Zero();
  if (with_h0) {
    Matrix b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b(i, j) = Complex(gauss(rng), gauss(rng));
    h0 = (b + b.adjoint()) / 2.0;
  }
  return model_from_gamma(g, h0);
}

Vector random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vector v(2);
  v << Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

}  // namespace

TEST_CASE("survival probability") {
  SUBCASE("tau = 0 gives 1") {
    std::mt19937_64 rng(11);
    CHECK(survival_probability(random_qubit_model(rng), random_state(rng), 0.0) == 1.0);
  }
  SUBCASE("dephasing |+> closed form at tau = 0.1") {
    const double p = survival_probability(dephasing_model(1.0), plus_state(), 0.1);
    CHECK(p == doctest::Approx((1.0 + std::exp(-0.2)) / 2.0).epsilon(1e-12));
    CHECK(p == doctest::Approx(0.9093653765389909).epsilon(1e-12));
  }
  SUBCASE("an eigenstate of a noiseless Hamiltonian never decays") {
    SystemModel model;
    model.h0 = sigma_z();
    Vector psi0(2);
    psi0 << 1.0, 0.0;
    for (double tau : {0.1, 1.0, 7.0})
      CHECK(survival_probability(model, psi0, tau) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("effective rate") {
  CHECK(effective_rate(1.0, 0.5) == 0.0);
  CHECK(effective_rate(std::exp(-0.1), 1.0) == doctest::Approx(0.1).epsilon(1e-12));
  const double p = survival_probability(dephasing_model(1.0), plus_state(), 0.1);
  CHECK(effective_rate(p, 0.1) == doctest::Approx(0.9500831117835354).epsilon(1e-12));
  CHECK_THROWS_AS(effective_rate(0.0, 1.0), NumericalError);
  CHECK_THROWS_AS(effective_rate(1.5, 1.0), SchemaError);
  CHECK_THROWS_AS(effective_rate(0.5, 0.0), SchemaError);
  // Tiny excursions above 1 are clamped to rate 0, not errors.
  CHECK(effective_rate(1.0 + 1e-13, 1.0) == 0.0);
}

TEST_CASE("repeated survival") {
  CHECK(repeated_survival(1.0, 0.1, 5.0) == 1.0);
  CHECK(repeated_survival(0.99, 0.01, 1.0) == doctest::Approx(0.3660323412732292).epsilon(1e-12));
  SUBCASE("consistency with the exponential form") {
    for (double p : {0.3, 0.87, 0.999}) {
      const double tau = 0.05, t = 0.42;  // non-integer cycle count
      CHECK(repeated_survival(p, tau, t) ==
            doctest::Approx(std::exp(-effective_rate(p, tau) * t)).epsilon(1e-12));
    }
  }
  SUBCASE("strictly decreasing in t when p < 1") {
    double prev = 1.0;
    for (double t : {0.1, 0.2, 0.5, 1.0, 2.0}) {
      const double val = repeated_survival(0.95, 0.1, t);
      CHECK(val < prev);
      prev = val;
    }
  }
}

TEST_CASE("quadratic decay check") {
  Vector eigenstate(2);
  eigenstate << 1.0, 0.0;
  CHECK(quadratic_decay_check(sigma_z(), eigenstate, 0.3) == 1.0);
  CHECK(quadratic_decay_check(sigma_z(), plus_state(), 0.3) ==
        doctest::Approx(1.0 - 0.09).epsilon(1e-14));

  SUBCASE("noiseless survival deviates from it at O(tau^4)") {
    SystemModel model;
    model.h0 = sigma_z();
    const Vector psi0 = plus_state();
    const double tau = 0.02;
    const double err1 =
        std::abs(survival_probability(model, psi0, tau) - quadratic_decay_check(sigma_z(), psi0, tau));
    const double err2 = std::abs(survival_probability(model, psi0, tau / 2) -
                                 quadratic_decay_check(sigma_z(), psi0, tau / 2));
    CHECK(err1 / err2 == doctest::Approx(16.0).epsilon(0.05));
  }
}

TEST_CASE("zeno limit rate, control-free") {
  std::mt19937_64 rng(12);
  SUBCASE("no noise gives zero") {
    SystemModel model;
    model.h0 = sigma_z();
    CHECK(zeno_limit_rate_free(model, plus_state()) == 0.0);
  }
  SUBCASE("dephasing at the equator decays at mu") {
    CHECK(zeno_limit_rate_free(dephasing_model(0.7), plus_state()) ==
          doctest::Approx(0.7).epsilon(1e-12));
  }
  SUBCASE("amplitude damping from |1> decays at mu") {
    Vector psi1(2);
    psi1 << 0.0, 1.0;
    CHECK(zeno_limit_rate_free(ad_model(1.3), psi1) == doctest::Approx(1.3).epsilon(1e-12));
  }
  SUBCASE("never negative (Cauchy-Schwarz)") {
    for (int k = 0; k < 200; ++k)
      CHECK(zeno_limit_rate_free(random_qubit_model(rng), random_state(rng)) >= -1e-12);
  }
  SUBCASE("equals the Liouville-space route -<L_mu>") {
    for (int k = 0; k < 50; ++k) {
      const SystemModel model = random_qubit_model(rng);
      const Vector psi0 = random_state(rng);
      const Vector v0 = vectorize(pure_density(psi0));
      Superoperator lmu = Superoperator::Zero(4, 4);
      for (const auto& ch : model.channels) lmu += dissipator_superop(ch);
      const double via_liouville = -(v0.adjoint() * lmu * v0).value().real();
      CHECK(zeno_limit_rate_free(model, psi0) ==
            doctest::Approx(via_liouville).epsilon(1e-11));
    }
  }
}

TEST_CASE("first-order coefficient of the effective rate") {
  SUBCASE("noiseless sigma_z from |+>: slope equals the Hamiltonian variance") {
    SystemModel model;
    model.h0 = sigma_z();
    CHECK(first_order_coefficient_free(model, plus_state()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("pure dephasing leaves |0> untouched at all orders") {
    Vector psi0(2);
    psi0 << 1.0, 0.0;
    CHECK(first_order_coefficient_free(dephasing_model(1.0), psi0) == 0.0);
  }
  SUBCASE("pure dephasing from |+>: coefficient is -mu^2/2") {
    CHECK(first_order_coefficient_free(dephasing_model(1.0), plus_state()) ==
          doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("matches the finite-tau slope of the effective rate") {
    std::mt19937_64 rng(13);
    int tested = 0;
    while (tested < 12) {
      const SystemModel model = random_qubit_model(rng);
      const Vector psi0 = random_state(rng);
      const double coeff = first_order_coefficient_free(model, psi0);
      if (std::abs(coeff) < 0.05) continue;  // relative check needs a nonzero slope
      ++tested;
      const std::vector<double> taus = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (double tau : taus) {
        const double g = effective_rate(survival_probability(model, psi0, tau), tau);
        sx += tau;
        sy += g;
        sxx += tau * tau;
        sxy += tau * g;
      }
      const int n = int(taus.size());
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      CHECK(slope == doctest::Approx(coeff).epsilon(0.02));
    }
  }
}

TEST_CASE("minimum measurement frequency, control-free") {
  SUBCASE("pure dephasing from |+>: threshold mu/2") {
    CHECK(min_frequency_free(dephasing_model(1.0), plus_state()) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("no noise is inapplicable") {
    SystemModel model;
    model.h0 = sigma_z();
    CHECK_THROWS_AS(min_frequency_free(model, plus_state()), ConditionInapplicableError);
  }
  SUBCASE("doubling all rates doubles the threshold for h0 = 0") {
    const double base = min_frequency_free(dephasing_model(0.6), plus_state());
    CHECK(min_frequency_free(dephasing_model(1.2), plus_state()) ==
          doctest::Approx(2.0 * base).epsilon(1e-12));
  }
}

TEST_CASE("convergence to the Zeno limit is linear in tau") {
  std::mt19937_64 rng(14);
  int tested = 0;
  while (tested < 100) {
    const SystemModel model = random_qubit_model(rng);
    const Vector psi0 = random_state(rng);
    const double coeff = first_order_coefficient_free(model, psi0);
    const double gamma0 = zeno_limit_rate_free(model, psi0);
    if (std::abs(coeff) < 0.05) continue;
    ++tested;
    // gap(tau)/tau = C + O(tau); Richardson-extrapolate C from tau <= 1e-2 and
    // compare with the predicted linear coefficient.
    auto gap_over_tau = [&](double tau) {
      return (effective_rate(survival_probability(model, psi0, tau), tau) - gamma0) / tau;
    };
    const double c_est = 2.0 * gap_over_tau(5e-3) - gap_over_tau(1e-2);
    CHECK(std::abs(c_est - coeff) <= 0.02 * std::abs(coeff));
  }
}

TEST_CASE("decay estimate ties p, gamma and the total survival together") {
  ZenoProtocol protocol{0.1, 2.0, plus_state()};
  const auto est = estimate_decay(dephasing_model(1.0), protocol);
  CHECK(est.p_tau == doctest::Approx(0.9093653765389909).epsilon(1e-12));
  CHECK(est.gamma_eff == doctest::Approx(0.9500831117835354).epsilon(1e-12));
  CHECK(est.survival_total ==
        doctest::Approx(std::exp(-est.gamma_eff * 2.0)).epsilon(1e-12));
  CHECK(est.survival_total ==
        doctest::Approx(repeated_survival(est.p_tau, 0.1, 2.0)).epsilon(1e-12));

  protocol.tau = 0.0;
  CHECK_THROWS_AS(estimate_decay(dephasing_model(1.0), protocol), SchemaError);
}

TEST_CASE("noiseless effective rate vanishes linearly in tau") {
  SystemModel model;
  model.h0 = sigma_z();
  const Vector psi0 = plus_state();
  double prev_ratio = 0.0;
  for (double tau : {2e-2, 1e-2, 5e-3}) {
    const double g = effective_rate(survival_probability(model, psi0, tau), tau);
    const double ratio = g / tau;
    if (prev_ratio != 0.0) CHECK(ratio == doctest::Approx(prev_ratio).epsilon(1e-3));
    prev_ratio = ratio;
  }
  CHECK(prev_ratio == doctest::Approx(1.0).epsilon(1e-3));  // variance of sigma_z on |+>
}
