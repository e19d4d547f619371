#include "zeno/model.hpp"

#include <sstream>

namespace zeno {

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

void validate_density_matrix(const Matrix& rho, double herm_tol, double eig_tol) {
  if (rho.rows() != rho.cols()) throw SchemaError("density matrix must be square");
  if (!rho.allFinite()) throw SchemaError("density matrix has non-finite entries");
  const double hd = hermiticity_defect(rho);
  if (hd > herm_tol) {
    std::ostringstream os;
    os << "density matrix not Hermitian (defect " << hd << ")";
    throw SchemaError(os.str());
  }
  const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr_err > herm_tol) {
    std::ostringstream os;
    os << "density matrix trace differs from 1 by " << tr_err;
    throw SchemaError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < eig_tol) {
    std::ostringstream os;
    os << "density matrix not PSD (min eigenvalue " << es.eigenvalues().minCoeff() << ")";
    throw SchemaError(os.str());
  }
}

Matrix pure_density(const Vector& psi) {
  validate_state(psi);
  return psi * psi.adjoint();
}

void validate_state(const Vector& psi) {
  if (psi.size() == 0) throw SchemaError("empty state vector");
  if (!psi.allFinite()) throw SchemaError("state vector has non-finite entries");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw SchemaError("state vector not normalized within 1e-12");
}

void SystemModel::validate() const {
  if (h0.rows() != h0.cols() || h0.rows() == 0)
    throw SchemaError("free Hamiltonian must be square and non-empty");
  if (!is_hermitian(h0, 1e-10)) throw SchemaError("free Hamiltonian not Hermitian");
  for (const auto& ch : channels) {
    if (ch.jump.rows() != dim() || ch.jump.cols() != dim())
      throw SchemaError("jump operator dimension mismatch");
    if (!ch.jump.allFinite()) throw SchemaError("jump operator has non-finite entries");
    if (ch.rate < 0.0) throw MarkovianityError("negative dissipation rate");
  }
}

}  // namespace zeno
