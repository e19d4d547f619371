#include "zeno/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeno/quadrature.hpp"

namespace zeno {

double ensemble_fidelity(const RateField& field, double t, int n_alpha, int n_beta) {
  if (t < 0.0) throw std::invalid_argument("ensemble_fidelity: negative time");
  if (n_alpha < 2 || n_beta < 2) throw std::invalid_argument("ensemble_fidelity: too few nodes");
  // (1/4pi) int dbeta int dalpha e^{-gamma t} sin(alpha)
  //   = (1/4pi) int_0^{2pi} dbeta int_{-1}^{1} du e^{-gamma(acos u, beta) t},
  // integrated piecewise between the field's kinks in u.
  std::vector<double> edges = {-1.0};
  for (double b : field.cos_alpha_breakpoints)
    if (b > -1.0 && b < 1.0) edges.push_back(b);
  edges.push_back(1.0);
  std::sort(edges.begin(), edges.end());

  double total = 0.0;
  for (size_t seg = 0; seg + 1 < edges.size(); ++seg) {
    auto [u, w] = gauss_legendre(n_alpha, edges[seg], edges[seg + 1]);
    for (int j = 0; j < n_beta; ++j) {
      const double beta = j * 2.0 * M_PI / n_beta;  // periodic trapezoid
      double inner = 0.0;
      for (int i = 0; i < n_alpha; ++i) {
        const double alpha = std::acos(std::min(1.0, std::max(-1.0, u[i])));
        inner += w[i] * std::exp(-field.rate(alpha, beta) * t);
      }
      total += inner;
    }
  }
  const double f = total / (2.0 * n_beta);
  return std::min(1.0, std::max(0.0, f));
}

std::vector<std::pair<double, double>> fidelity_curve(const RateField& field,
                                                      const std::vector<double>& t_grid,
                                                      int n_alpha, int n_beta) {
  std::vector<std::pair<double, double>> curve;
  curve.reserve(t_grid.size());
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (i > 0 && t_grid[i] < t_grid[i - 1])
      throw std::invalid_argument("fidelity_curve: t grid must be sorted");
    curve.emplace_back(t_grid[i], ensemble_fidelity(field, t_grid[i], n_alpha, n_beta));
  }
  return curve;
}

}  // namespace zeno
