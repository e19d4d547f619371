#include "zeno/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace zeno {

namespace {

std::pair<Eigen::VectorXd, Eigen::VectorXd> compute_gauss_legendre(int n) {
  Eigen::VectorXd x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess for the ith root of P_n, refined by Newton.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  return {x, w};
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
  static std::mutex mu;
  static std::unordered_map<int, std::pair<Eigen::VectorXd, Eigen::VectorXd>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n, double a, double b) {
  auto [x, w] = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  return {(mid + half * x.array()).matrix(), (half * w.array()).matrix()};
}

}  // namespace zeno
