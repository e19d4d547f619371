#include "zeno/control.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zeno/liouville.hpp"
#include "zeno/quadrature.hpp"
#include "zeno/zeno.hpp"

namespace zeno {

namespace {

double mod_2pi_residual(double x) {
  const double two_pi = 2.0 * M_PI;
  double r = std::remainder(x, two_pi);
  return std::abs(r);
}

// Best rational approximation p/q with q <= q_max (continued fractions).
bool is_rational(double x, int q_max, double tol) {
  double a = x;
  long long p0 = 1, q0 = 0, p1 = (long long)std::floor(a), q1 = 1;
  a -= std::floor(a);
  for (int it = 0; it < 64 && q1 <= q_max; ++it) {
    if (std::abs(x - double(p1) / double(q1)) <= tol) return true;
    if (a < 1e-15) break;
    a = 1.0 / a;
    const long long k = (long long)std::floor(a);
    a -= std::floor(a);
    const long long p2 = k * p1 + p0, q2 = k * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return q1 <= q_max && std::abs(x - double(p1) / double(q1)) <= tol;
}

Superoperator noise_superop(const SystemModel& model) {
  const Eigen::Index d2 = model.dim() * model.dim();
  Superoperator lmu = Superoperator::Zero(d2, d2);
  for (const auto& ch : model.channels) lmu += dissipator_superop(ch);
  return lmu;
}

double rotated_expectation(const Superoperator& target, const ControlHamiltonian& ctrl,
                           const Vector& v0, double eta) {
  const Superoperator lt = rotate_frame(target, ctrl.hc, ctrl.omega, eta);
  return (v0.adjoint() * lt * v0).value().real();
}

void require_resonant(const ControlHamiltonian& ctrl, const char* where) {
  const auto report = check_resonance(ctrl);
  if (!report.resonant) {
    std::ostringstream os;
    os << where << ": control violates the resonance condition ("
       << report.violations.size() << " eigenvalue pair(s))";
    throw ResonanceError(os.str());
  }
}

}  // namespace

ResonanceReport check_resonance(const ControlHamiltonian& ctrl, double tol) {
  if (!is_hermitian(ctrl.hc, 1e-10)) throw SchemaError("check_resonance: hc not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(ctrl.hc);
  const Eigen::VectorXd evals = es.eigenvalues();
  const int d = int(evals.size());

  ResonanceReport report;
  report.resonant = true;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double gap = evals[i] - evals[j];
      const double res = mod_2pi_residual(ctrl.omega * gap);
      if (res > tol) {
        report.resonant = false;
        report.violations.push_back({i, j, gap, res});
      }
    }
  }

  // Necessary condition: all gap ratios rational (denominators <= 64 checked).
  std::vector<double> gaps;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(evals[i] - evals[j]) > tol) gaps.push_back(std::abs(evals[i] - evals[j]));
  report.rational_gaps = true;
  for (size_t i = 0; i + 1 < gaps.size(); ++i) {
    for (size_t j = i + 1; j < gaps.size(); ++j) {
      const double ratio = gaps[i] / gaps[j];
      if (!is_rational(ratio, 64, 1e-9)) {
        report.rational_gaps = false;
        break;
      }
    }
    if (!report.rational_gaps) break;
  }
  return report;
}

Superoperator controlled_propagator(const SystemModel& model, const ControlHamiltonian& ctrl,
                                    double tau) {
  if (tau <= 0.0) throw SchemaError("controlled_propagator: tau must be positive");
  model.validate();
  const Superoperator exponent =
      ctrl.omega * hamiltonian_superop(ctrl.hc) + tau * total_liouvillian(model);
  return expm(exponent);
}

double controlled_survival(const SystemModel& model, const ControlHamiltonian& ctrl,
                           const Vector& psi0, double tau) {
  if (tau < 0.0) throw SchemaError("controlled_survival: negative tau");
  validate_state(psi0);
  const Vector v0 = vectorize(pure_density(psi0));
  Vector vt;
  if (tau == 0.0) {
    vt = expm(ctrl.omega * hamiltonian_superop(ctrl.hc)) * v0;
  } else {
    vt = controlled_propagator(model, ctrl, tau) * v0;
  }
  const Complex p = (v0.adjoint() * vt).value();
  if (std::abs(p.imag()) > 1e-10)
    throw NumericalError("controlled_survival: expectation not real within 1e-10");
  if (p.real() < -1e-10 || p.real() > 1.0 + 1e-10)
    throw NumericalError("controlled_survival: probability outside [0,1] beyond tolerance");
  return std::min(1.0, std::max(0.0, p.real()));
}

double zeno_limit_rate_controlled(const SystemModel& model, const ControlHamiltonian& ctrl,
                                  const Vector& psi0, int quadrature_order) {
  model.validate();
  validate_state(psi0);
  require_resonant(ctrl, "zeno_limit_rate_controlled");
  const Superoperator lmu = noise_superop(model);
  const Vector v0 = vectorize(pure_density(psi0));
  auto [nodes, weights] = gauss_legendre(quadrature_order, 0.0, 1.0);
  double integral = 0.0;
  for (int k = 0; k < quadrature_order; ++k)
    integral += weights[k] * rotated_expectation(lmu, ctrl, v0, nodes[k]);
  return -integral;
}

double first_derivative_hamiltonian_part(const SystemModel& model,
                                         const ControlHamiltonian& ctrl, const Vector& psi0,
                                         int quadrature_order) {
  model.validate();
  validate_state(psi0);
  const Superoperator lh = hamiltonian_superop(model.h0);
  const Vector v0 = vectorize(pure_density(psi0));
  auto [nodes, weights] = gauss_legendre(quadrature_order, 0.0, 1.0);
  double integral = 0.0;
  for (int k = 0; k < quadrature_order; ++k)
    integral += weights[k] * rotated_expectation(lh, ctrl, v0, nodes[k]);
  return integral;
}

double min_frequency_controlled(const SystemModel& model, const ControlHamiltonian& ctrl,
                                const Vector& psi0, int outer_order, int inner_order) {
  model.validate();
  validate_state(psi0);
  require_resonant(ctrl, "min_frequency_controlled");

  const Superoperator lmu = noise_superop(model);
  const Superoperator lfull = hamiltonian_superop(model.h0) + lmu;
  const Vector v0 = vectorize(pure_density(psi0));

  auto rotated = [&](double eta) { return rotate_frame(lfull, ctrl.hc, ctrl.omega, eta); };

  // dp/dtau at 0: single eta-integral of the noise part (the Hamiltonian part
  // averages to zero).
  auto [nodes1, weights1] = gauss_legendre(inner_order, 0.0, 1.0);
  double p1 = 0.0;
  for (int k = 0; k < inner_order; ++k)
    p1 += weights1[k] * rotated_expectation(lmu, ctrl, v0, nodes1[k]);

  if (std::abs(p1) < 1e-14)
    throw ConditionInapplicableError("min_frequency_controlled: dp/dtau vanishes at tau=0");

  // d2p/dtau2 at 0 = 2 * time-ordered double integral over 0 <= eta1 <= eta2 <= 1.
  auto [outer_nodes, outer_weights] = gauss_legendre(outer_order, 0.0, 1.0);
  auto [unit_nodes, unit_weights] = gauss_legendre(inner_order, 0.0, 1.0);
  double dbl = 0.0;
  for (int a = 0; a < outer_order; ++a) {
    const double eta2 = outer_nodes[a];
    const Superoperator l2 = rotated(eta2);
    Vector inner_sum = Vector::Zero(v0.size());
    for (int b = 0; b < inner_order; ++b) {
      const double eta1 = eta2 * unit_nodes[b];
      inner_sum += (eta2 * unit_weights[b]) * (rotated(eta1) * v0);
    }
    dbl += outer_weights[a] * (v0.adjoint() * (l2 * inner_sum)).value().real();
  }
  const double p2 = 2.0 * dbl;
  return std::abs((p2 - p1 * p1) / (2.0 * p1));
}

}  // namespace zeno
