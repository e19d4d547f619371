#include "zeno/qubit.hpp"

#include <cmath>

#include "zeno/liouville.hpp"

namespace zeno {

const Eigen::Matrix2cd& sigma_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}

const Eigen::Matrix2cd& sigma_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Eigen::Matrix2cd& sigma_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}

Eigen::Vector3d bloch_from_angles(double alpha, double beta) {
  return {std::sin(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta), std::cos(alpha)};
}

Eigen::Vector2cd state_from_angles(double alpha, double beta) {
  Eigen::Vector2cd psi;
  psi << std::cos(alpha / 2.0), std::exp(Complex(0, beta)) * std::sin(alpha / 2.0);
  return psi;
}

Eigen::Vector2cd state_from_bloch(const Eigen::Vector3d& r) {
  if (std::abs(r.norm() - 1.0) > 1e-12)
    throw SchemaError("state_from_bloch: Bloch vector not pure (norm != 1)");
  const double alpha = std::acos(std::clamp(r.z(), -1.0, 1.0));
  const double beta = (std::abs(r.x()) + std::abs(r.y()) > 0.0) ? std::atan2(r.y(), r.x()) : 0.0;
  return state_from_angles(alpha, beta);
}

Eigen::Vector3d bloch_of_density(const Eigen::Matrix2cd& rho) {
  return {(rho * sigma_x()).trace().real(), (rho * sigma_y()).trace().real(),
          (rho * sigma_z()).trace().real()};
}

Eigen::Matrix2cd pauli_along(const Eigen::Vector3d& n) {
  return n.x() * sigma_x() + n.y() * sigma_y() + n.z() * sigma_z();
}

Eigen::Vector3d ControlDirection::axis() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Eigen::Vector3d nu_from_gamma(const Eigen::Matrix3cd& gamma) {
  return 2.0 * Eigen::Vector3d(gamma(1, 2).imag(), gamma(2, 0).imag(), gamma(0, 1).imag());
}

Eigen::Matrix3cd preset_dephasing(double mu) {
  if (mu < 0.0) throw MarkovianityError("preset_dephasing: negative intensity");
  Eigen::Matrix3cd g = Eigen::Matrix3cd::Zero();
  g(2, 2) = mu;
  return g;
}

Eigen::Matrix3cd preset_amplitude_damping(double mu) {
  if (mu < 0.0) throw MarkovianityError("preset_amplitude_damping: negative intensity");
  Eigen::Matrix3cd g = Eigen::Matrix3cd::Zero();
  g(0, 0) = mu / 4.0;
  g(1, 1) = mu / 4.0;
  g(0, 1) = Complex(0, -mu / 4.0);
  g(1, 0) = Complex(0, mu / 4.0);
  return g;
}

void validate_gamma(const Eigen::Matrix3cd& gamma) {
  if (!gamma.allFinite()) throw SchemaError("gamma matrix has non-finite entries");
  if ((gamma - gamma.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw SchemaError("gamma matrix not Hermitian within 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(gamma);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw MarkovianityError("gamma matrix not positive semidefinite");
}

std::vector<NoiseChannel> gamma_to_channels(const Eigen::Matrix3cd& gamma) {
  validate_gamma(gamma);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(gamma);
  std::vector<NoiseChannel> channels;
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int m = 0; m < 3; ++m) {
    const double lambda = es.eigenvalues()[m];
    if (lambda <= 1e-14 * scale) continue;
    const Eigen::Vector3cd u = es.eigenvectors().col(m);
    Eigen::Matrix2cd v = u(0) * sigma_x() + u(1) * sigma_y() + u(2) * sigma_z();
    // Normalize the jump to unit spectral norm, folding the scale into the rate.
    const double s = v.jacobiSvd().singularValues()(0);
    channels.push_back({lambda * s * s, Matrix(v / s)});
  }
  return channels;
}

SystemModel model_from_gamma(const Eigen::Matrix3cd& gamma, const Eigen::Matrix2cd& h0) {
  SystemModel model;
  model.h0 = h0;
  model.channels = gamma_to_channels(gamma);
  return model;
}

namespace {

void require_pure(const Eigen::Vector3d& r0) {
  if (std::abs(r0.norm() - 1.0) > 1e-12)
    throw SchemaError("Bloch decay-rate formulas require a pure state (|r0| = 1)");
}

// PSD-ness is validated at entry points (presets, gamma_to_channels, grid_oracle);
// the per-evaluation check stays cheap.
void require_hermitian_gamma(const Eigen::Matrix3cd& g) {
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw SchemaError("gamma matrix not Hermitian within 1e-12");
}

// Real quadratic form a^T Re(G) b; the antisymmetric imaginary part of a
// Hermitian G never contributes for real vectors.
double quad_form(const Eigen::Matrix3cd& g, const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return a.dot(g.real() * b);
}

}  // namespace

double rate_free_bloch(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0) {
  require_hermitian_gamma(gamma);
  require_pure(r0);
  return -quad_form(gamma, r0, r0) + gamma.trace().real() + nu_from_gamma(gamma).dot(r0);
}

double rate_controlled_bloch(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                             const Eigen::Vector3d& nc) {
  require_hermitian_gamma(gamma);
  require_pure(r0);
  if (std::abs(nc.norm() - 1.0) > 1e-12)
    throw SchemaError("rate_controlled_bloch: control direction must be a unit vector");
  const Eigen::Matrix3d gr = gamma.real();
  const double d = nc.dot(r0);
  const Eigen::Vector3d cross = nc.cross(r0);
  return -1.5 * d * d * nc.dot(gr * nc) + d * nc.dot(gr * r0) - 0.5 * r0.dot(gr * r0) -
         0.5 * cross.dot(gr * cross) + gr.trace() + d * nu_from_gamma(gamma).dot(nc);
}

double dephasing_rate_controlled(double alpha, double beta, double theta_c, double phi_c,
                                 double mu) {
  if (mu < 0.0) throw MarkovianityError("dephasing_rate_controlled: negative intensity");
  const double d = beta - phi_c;
  const double s_a = std::sin(alpha), s2a = std::sin(2 * alpha);
  const double c2a = std::cos(2 * alpha);
  const double c2t = std::cos(2 * theta_c), c4t = std::cos(4 * theta_c);
  const double s2t = std::sin(2 * theta_c), s4t = std::sin(4 * theta_c);
  const double c_d = std::cos(d), c2d = std::cos(2 * d);
  return (mu / 64.0) *
         (39.0 - 2.0 * c2a * (1.0 + 3.0 * c2t) * (1.0 + 3.0 * c2t) - 3.0 * c4t -
          8.0 * c2d * s_a * s_a * std::sin(theta_c) * std::sin(theta_c) -
          4.0 * c2t * (1.0 + 6.0 * c2d * s_a * s_a * std::sin(theta_c) * std::sin(theta_c)) -
          4.0 * c_d * s2a * (2.0 * s2t + 3.0 * s4t));
}

double ad_rate_controlled(double alpha, double beta, double theta_c, double phi_c, double mu) {
  if (mu < 0.0) throw MarkovianityError("ad_rate_controlled: negative intensity");
  const double d = beta - phi_c;
  const double ca = std::cos(alpha), c2a = std::cos(2 * alpha), sa = std::sin(alpha);
  const double s2a = std::sin(2 * alpha);
  const double ct = std::cos(theta_c), c2t = std::cos(2 * theta_c), c4t = std::cos(4 * theta_c);
  const double s2t = std::sin(2 * theta_c);
  const double cd = std::cos(d), c2d = std::cos(2 * d);
  return (mu / 512.0) *
         (178.0 + 12.0 * std::cos(2.0 * (alpha - theta_c)) + std::cos(2.0 * (alpha - d)) +
          std::cos(2.0 * (alpha + d)) - 256.0 * ca * ct * ct + 8.0 * c2t + 6.0 * c4t +
          2.0 * c2a * (11.0 + 6.0 * c2t + 9.0 * c4t) +
          2.0 * c2d * (-1.0 + 2.0 * (4.0 * c2t - 3.0 * c4t) * sa * sa) +
          4.0 * (-32.0 * cd * sa + (4.0 * cd * (1.0 + 3.0 * c2t) - 3.0) * s2a) * s2t);
}

}  // namespace zeno
