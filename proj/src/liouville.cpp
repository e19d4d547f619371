#include "zeno/liouville.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace zeno {

Vector vectorize(const Matrix& rho) {
  // Eigen is column-major, so the raw layout is already the column stacking.
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix devectorize(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
  if (d * d != v.size()) throw SchemaError("devectorize: length is not a perfect square");
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Superoperator hamiltonian_superop(const Matrix& h) {
  if (!is_hermitian(h, 1e-10)) throw SchemaError("hamiltonian_superop: operator not Hermitian");
  const Eigen::Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  return Complex(0, -1) *
         (Eigen::kroneckerProduct(id, h) - Eigen::kroneckerProduct(h.transpose(), id));
}

Superoperator dissipator_superop(const NoiseChannel& ch) {
  if (ch.rate < 0.0) throw MarkovianityError("dissipator_superop: negative rate");
  const Eigen::Index d = ch.jump.rows();
  if (ch.jump.cols() != d) throw SchemaError("dissipator_superop: jump operator not square");
  const Matrix id = Matrix::Identity(d, d);
  const Matrix vdv = ch.jump.adjoint() * ch.jump;
  return ch.rate * (Eigen::kroneckerProduct(ch.jump.conjugate(), ch.jump) -
                    0.5 * Eigen::kroneckerProduct(id, vdv) -
                    0.5 * Eigen::kroneckerProduct(vdv.transpose(), id));
}

Superoperator total_liouvillian(const SystemModel& model) {
  model.validate();
  Superoperator l = hamiltonian_superop(model.h0);
  for (const auto& ch : model.channels) l += dissipator_superop(ch);
  return l;
}

Matrix expm(const Matrix& a) {
  Matrix result = a.exp();
  if (!result.allFinite()) {
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 5.37) std::frexp(norm / 5.37, &squarings);
    std::ostringstream os;
    os << "matrix exponential did not converge (1-norm " << norm << ", squaring depth "
       << squarings << ")";
    throw NumericalError(os.str());
  }
  return result;
}

Matrix propagate(const SystemModel& model, const Matrix& rho0, double t) {
  if (t < 0.0) throw SchemaError("propagate: negative time");
  validate_density_matrix(rho0);
  const Matrix rho_t = devectorize(expm(total_liouvillian(model) * t) * vectorize(rho0));
  validate_density_matrix(rho_t, 1e-9, -1e-9);
  return rho_t;
}

Superoperator rotate_frame(const Superoperator& target, const Matrix& hc, double omega,
                           double eta) {
  if (!is_hermitian(hc, 1e-10)) throw SchemaError("rotate_frame: control not Hermitian");
  if (eta == 0.0) return target;
  const Superoperator lc = hamiltonian_superop(hc);
  return expm(-omega * eta * lc) * target * expm(omega * eta * lc);
}

double trace_preservation_defect(const Superoperator& l) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(l.rows()))));
  const Vector vec_id = vectorize(Matrix::Identity(d, d));
  return (vec_id.adjoint() * l).cwiseAbs().maxCoeff();
}

}  // namespace zeno
