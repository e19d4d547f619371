#include "zeno/zeno.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "zeno/liouville.hpp"

namespace zeno {

namespace {

double real_expectation(const Complex& value, const char* where) {
  if (std::abs(value.imag()) > 1e-10) {
    std::ostringstream os;
    os << where << ": imaginary part " << value.imag() << " exceeds 1e-10";
    throw NumericalError(os.str());
  }
  return value.real();
}

double clamp_probability(double p, const char* where) {
  if (p < -1e-10 || p > 1.0 + 1e-10) {
    std::ostringstream os;
    os << where << ": value " << p << " outside [0,1] beyond tolerance";
    throw NumericalError(os.str());
  }
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace

void ZenoProtocol::validate() const {
  if (tau <= 0.0) throw SchemaError("ZenoProtocol: tau must be positive");
  if (total_time < 0.0) throw SchemaError("ZenoProtocol: negative total time");
  validate_state(psi0);
}

DecayEstimate estimate_decay(const SystemModel& model, const ZenoProtocol& protocol) {
  protocol.validate();
  DecayEstimate est;
  est.p_tau = survival_probability(model, protocol.psi0, protocol.tau);
  est.gamma_eff = effective_rate(est.p_tau, protocol.tau);
  est.survival_total = std::exp(-est.gamma_eff * protocol.total_time);
  return est;
}

double survival_probability(const SystemModel& model, const Vector& psi0, double tau) {
  if (tau < 0.0) throw SchemaError("survival_probability: negative tau");
  validate_state(psi0);
  const Matrix rho_t = propagate(model, pure_density(psi0), tau);
  const Complex p = psi0.adjoint() * rho_t * psi0;
  return clamp_probability(real_expectation(p, "survival_probability"), "survival_probability");
}

double effective_rate(double p_tau, double tau) {
  if (tau <= 0.0) throw SchemaError("effective_rate: tau must be positive");
  if (p_tau <= 0.0) throw NumericalError("effective_rate: p(tau) = 0 gives an infinite rate");
  if (p_tau > 1.0 + 1e-10) throw SchemaError("effective_rate: p(tau) > 1");
  const double gamma = -std::log(p_tau) / tau;
  return (gamma < 0.0 && gamma >= -1e-12) ? 0.0 : gamma;
}

double repeated_survival(double p_tau, double tau, double t) {
  if (t < 0.0) throw SchemaError("repeated_survival: negative time");
  if (tau <= 0.0) throw SchemaError("repeated_survival: tau must be positive");
  if (p_tau < 0.0 || p_tau > 1.0) throw SchemaError("repeated_survival: p outside [0,1]");
  return std::pow(p_tau, t / tau);
}

double quadratic_decay_check(const Matrix& h, const Vector& psi0, double tau) {
  if (!is_hermitian(h, 1e-10)) throw SchemaError("quadratic_decay_check: h not Hermitian");
  validate_state(psi0);
  const double mean = (psi0.adjoint() * h * psi0).value().real();
  const double mean_sq = (psi0.adjoint() * h * h * psi0).value().real();
  return 1.0 - tau * tau * (mean_sq - mean * mean);
}

double zeno_limit_rate_free(const SystemModel& model, const Vector& psi0) {
  model.validate();
  validate_state(psi0);
  double rate = 0.0;
  for (const auto& ch : model.channels) {
    const Complex vdv = (psi0.adjoint() * ch.jump.adjoint() * ch.jump * psi0).value();
    const Complex v = (psi0.adjoint() * ch.jump * psi0).value();
    rate += ch.rate * (vdv.real() - std::norm(v));
  }
  return rate;
}

namespace {

// Liouville-space moments <L^k> = vec(rho0)† L^k vec(rho0).
struct Moments {
  double mean_mu;   // <L_mu>
  double mean;      // <L>
  double mean_sq;   // <L^2>
};

Moments liouville_moments(const SystemModel& model, const Vector& psi0) {
  model.validate();
  validate_state(psi0);
  const Vector v0 = vectorize(pure_density(psi0));
  Superoperator lmu = Superoperator::Zero(v0.size(), v0.size());
  for (const auto& ch : model.channels) lmu += dissipator_superop(ch);
  const Superoperator l = hamiltonian_superop(model.h0) + lmu;
  Moments m{};
  m.mean_mu = (v0.adjoint() * lmu * v0).value().real();
  m.mean = (v0.adjoint() * l * v0).value().real();
  m.mean_sq = (v0.adjoint() * l * l * v0).value().real();
  return m;
}

}  // namespace

double first_order_coefficient_free(const SystemModel& model, const Vector& psi0) {
  const Moments m = liouville_moments(model, psi0);
  return -0.5 * (m.mean_sq - m.mean * m.mean);
}

double min_frequency_free(const SystemModel& model, const Vector& psi0) {
  const Moments m = liouville_moments(model, psi0);
  if (std::abs(m.mean_mu) < 1e-14)
    throw ConditionInapplicableError("min_frequency_free: <L_mu> vanishes");
  return std::abs((m.mean_sq - m.mean * m.mean) / (2.0 * m.mean_mu));
}

}  // namespace zeno
