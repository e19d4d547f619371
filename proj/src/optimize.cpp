#include "zeno/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace zeno {

double dephasing_branch_angle() { return std::acos(1.0 / 3.0); }

double dephasing_optimal_rate(double alpha, double mu) {
  const double c = std::cos(alpha);
  if (c > 1.0 / 3.0) return (mu / 8.0) * (5.0 - 2.0 * c - 3.0 * c * c);
  if (c >= -1.0 / 3.0) return mu / 2.0;
  return (mu / 8.0) * (5.0 - 3.0 * c) * (1.0 + c);
}

double ad_optimal_rate(double alpha, double mu) {
  const double s = std::sin(alpha / 2.0);
  return 0.375 * mu * s * s * s * s;
}

SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f, double x0,
                             double y0, double step, double f_tol, int max_iter) {
  struct Vertex {
    double x, y, val;
  };
  std::array<Vertex, 3> s = {Vertex{x0, y0, f(x0, y0)},
                             Vertex{x0 + step, y0, f(x0 + step, y0)},
                             Vertex{x0, y0 + step, f(x0, y0 + step)}};
  auto by_val = [](const Vertex& a, const Vertex& b) { return a.val < b.val; };
  int it = 0;
  for (; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), by_val);
    const double spread = s[2].val - s[0].val;
    const double size = std::max(std::hypot(s[1].x - s[0].x, s[1].y - s[0].y),
                                 std::hypot(s[2].x - s[0].x, s[2].y - s[0].y));
    if (spread <= f_tol * std::max(1.0, std::abs(s[0].val)) && size < 1e-9) break;
    const double cx = 0.5 * (s[0].x + s[1].x), cy = 0.5 * (s[0].y + s[1].y);
    const double rx = cx + (cx - s[2].x), ry = cy + (cy - s[2].y);
    const double fr = f(rx, ry);
    if (fr < s[0].val) {
      const double ex = cx + 2.0 * (cx - s[2].x), ey = cy + 2.0 * (cy - s[2].y);
      const double fe = f(ex, ey);
      s[2] = fe < fr ? Vertex{ex, ey, fe} : Vertex{rx, ry, fr};
    } else if (fr < s[1].val) {
      s[2] = {rx, ry, fr};
    } else {
      const double kx = cx + 0.5 * (s[2].x - cx), ky = cy + 0.5 * (s[2].y - cy);
      const double fk = f(kx, ky);
      if (fk < s[2].val) {
        s[2] = {kx, ky, fk};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
          s[i].y = s[0].y + 0.5 * (s[i].y - s[0].y);
          s[i].val = f(s[i].x, s[i].y);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_val);
  return {s[0].x, s[0].y, s[0].val, it};
}

namespace {

// Canonical angles of a unit vector: theta in [0, pi], phi in [0, 2pi), phi = 0 at poles.
std::pair<double, double> canonical_angles(const Eigen::Vector3d& n) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  double phi = 0.0;
  if (std::abs(n.x()) > 1e-14 || std::abs(n.y()) > 1e-14) {
    phi = std::atan2(n.y(), n.x());
    if (phi < 0.0) phi += 2.0 * M_PI;
  }
  return {theta, phi};
}

OptimizationResult finish_result(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                                 double theta, double phi, double gamma_opt,
                                 OptimizationResult::Method method, double kappa) {
  OptimizationResult res;
  res.theta_opt = theta;
  res.phi_opt = phi;
  res.gamma_opt = gamma_opt;
  res.kappa = kappa;
  res.method = method;
  const auto stat = stationarity_check(gamma, r0, ControlDirection{theta, phi});
  res.hessian_ok = stat.hessian_ok;
  res.degenerate = stat.degenerate;
  return res;
}

}  // namespace

OptimizationResult grid_oracle(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                               int n_theta, int n_phi) {
  validate_gamma(gamma);
  if (n_theta < 2 || n_phi < 2) throw SchemaError("grid_oracle: grid too small");
  auto rate = [&](double th, double ph) {
    return rate_controlled_bloch(gamma, r0, bloch_from_angles(th, ph));
  };

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double th = i * M_PI / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double ph = j * 2.0 * M_PI / n_phi;
      const double v = rate(th, ph);
      if (v < best) {
        best = v;
        best_theta = th;
        best_phi = ph;
      }
    }
  }

  const double step = 0.5 * M_PI / (n_theta - 1);
  const auto refined = nelder_mead_2d(rate, best_theta, best_phi, step, 1e-12, 400);
  double theta = best_theta, phi = best_phi, gamma_opt = best;
  if (refined.value <= best) {
    std::tie(theta, phi) = canonical_angles(bloch_from_angles(refined.x, refined.y));
    gamma_opt = refined.value;
  }

  const double gamma_free = rate_free_bloch(gamma, r0);
  const double kappa =
      gamma_free > 0.0 ? gamma_opt / gamma_free : std::numeric_limits<double>::quiet_NaN();
  return finish_result(gamma, r0, theta, phi, gamma_opt, OptimizationResult::Method::numeric,
                       kappa);
}

OptimizationResult optimal_dephasing(double alpha, double beta, double mu) {
  if (mu < 0.0) throw MarkovianityError("optimal_dephasing: negative intensity");
  const double a0 = dephasing_branch_angle();
  const double c = std::cos(alpha);
  double theta, phi, kappa;
  if (alpha < a0) {
    theta = alpha / 2.0;
    phi = beta;
    kappa = (3.0 * c + 5.0) / (8.0 * (1.0 + c));  // ratio limit also valid at the pole
  } else if (alpha <= M_PI - a0) {
    theta = M_PI / 2.0;
    phi = beta + M_PI / 2.0;
    kappa = 1.0 / (2.0 * std::sin(alpha) * std::sin(alpha));
  } else {
    theta = (M_PI + alpha) / 2.0;
    phi = beta;
    kappa = (5.0 - 3.0 * c) / (8.0 * (1.0 - c));
  }
  return finish_result(preset_dephasing(mu), bloch_from_angles(alpha, beta), theta, phi,
                       dephasing_optimal_rate(alpha, mu), OptimizationResult::Method::analytic,
                       kappa);
}

OptimizationResult optimal_amplitude_damping(double alpha, double beta, double mu) {
  if (mu < 0.0) throw MarkovianityError("optimal_amplitude_damping: negative intensity");
  return finish_result(preset_amplitude_damping(mu), bloch_from_angles(alpha, beta),
                       alpha / 2.0, beta, ad_optimal_rate(alpha, mu),
                       OptimizationResult::Method::analytic, 0.375);
}

StationarityReport stationarity_check(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                                      const ControlDirection& nc) {
  auto f = [&](double th, double ph) {
    return rate_controlled_bloch(gamma, r0, bloch_from_angles(th, ph));
  };
  const double t = nc.theta, p = nc.phi;
  const double h = 1e-5;

  auto d1 = [&](auto&& g) {
    const double coarse = (g(h) - g(-h)) / (2.0 * h);
    const double fine = (g(h / 2) - g(-h / 2)) / h;
    return (4.0 * fine - coarse) / 3.0;
  };
  auto d2 = [&](auto&& g) {
    const double f0 = g(0.0);
    const double coarse = (g(h) - 2.0 * f0 + g(-h)) / (h * h);
    const double fine = (g(h / 2) - 2.0 * f0 + g(-h / 2)) / (h * h / 4.0);
    return (4.0 * fine - coarse) / 3.0;
  };
  auto mixed = [&](double hh) {
    return (f(t + hh, p + hh) - f(t + hh, p - hh) - f(t - hh, p + hh) + f(t - hh, p - hh)) /
           (4.0 * hh * hh);
  };

  StationarityReport rep;
  rep.residual_theta = std::abs(d1([&](double dt) { return f(t + dt, p); }));
  rep.residual_phi = std::abs(d1([&](double dp) { return f(t, p + dp); }));
  const double a = d2([&](double dt) { return f(t + dt, p); });
  const double cc = d2([&](double dp) { return f(t, p + dp); });
  const double b = (4.0 * mixed(h / 2) - mixed(h)) / 3.0;

  const double scale = std::max({1e-30, gamma.trace().real(), std::abs(a), std::abs(cc)});
  rep.degenerate =
      std::abs(std::sin(t)) < 1e-8 || std::min(std::abs(a), std::abs(cc)) < 1e-4 * scale;
  rep.hessian_ok = a > 0.0 && (a * cc - b * b) > 0.0;
  return rep;
}

double variational_residual(const Eigen::Matrix3cd& gamma, const Eigen::Vector3d& r0,
                            const Eigen::Vector3d& nc) {
  validate_gamma(gamma);
  const Eigen::Vector3d nu = nu_from_gamma(gamma);
  const Eigen::Matrix3d pn = nc * nc.transpose();
  const Eigen::Matrix3d pr = r0 * r0.transpose();
  Eigen::Matrix3d r;
  r << 0, r0.z(), -r0.y(), -r0.z(), 0, r0.x(), r0.y(), -r0.x(), 0;

  const Eigen::Matrix3cd pn_c = pn.cast<Complex>(), pr_c = pr.cast<Complex>();
  const Eigen::Matrix3cd r_c = r.cast<Complex>();
  const Eigen::Matrix3cd m0 = -1.5 * gamma * pn_c * pr_c - 1.5 * pr_c * pn_c * gamma +
                              0.5 * gamma * pr_c + 0.5 * pr_c * gamma -
                              0.5 * r_c.transpose() * gamma * r_c +
                              r0.cast<Complex>() * nu.cast<Complex>().transpose();

  // Admissible variations dPn are real symmetric, so only the symmetrized real
  // part of the optimality bracket must vanish.
  const Eigen::Matrix3d m0r = 0.5 * (m0.real() + m0.real().transpose());

  Eigen::MatrixXd k(9, 9);
  for (int col = 0; col < 9; ++col) {
    Eigen::Matrix3d e = Eigen::Matrix3d::Zero();
    e(col % 3, col / 3) = 1.0;
    const Eigen::Matrix3d tmat = pn * e + e * pn - e;
    const Eigen::Matrix3d s = 0.5 * (tmat + tmat.transpose());
    k.col(col) = Eigen::Map<const Eigen::VectorXd>(s.data(), 9);
  }
  const Eigen::VectorXd m = Eigen::Map<const Eigen::VectorXd>(m0r.data(), 9);
  const Eigen::VectorXd lambda = k.completeOrthogonalDecomposition().solve(-m);
  return (k * lambda + m).norm();
}

}  // namespace zeno
