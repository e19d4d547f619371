#pragma once

#include <Eigen/Dense>
#include <utility>

namespace zeno {

/// Gauss–Legendre nodes and weights on [-1, 1] (Newton iteration, cached per order).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n);

/// Nodes/weights mapped to [a, b].
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n, double a, double b);

}  // namespace zeno
