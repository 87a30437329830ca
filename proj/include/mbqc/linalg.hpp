#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace mbqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Kronecker product `a (x) b`; `b` indexes the low-order part of the result.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                                              a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// `|<a, b>| >= (1 - tol) * |a| |b|`, with `<a, b> = tr(a^H b)`. Zero
/// operands are collinear with nothing.
template <typename DerivedA, typename DerivedB>
bool collinear(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
               double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    return false;
  }
  const Complex inner = (a.adjoint() * b).trace();
  return std::abs(inner) >= (1.0 - tol) * na * nb;
}

/// Smallest Frobenius distance between `a` and `e^{i phi} b` over phases.
template <typename DerivedA, typename DerivedB>
double phase_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  const Complex inner = (b.adjoint() * a).trace();
  const Complex phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : Complex(1.0, 0.0);
  return (a - phase * b).norm();
}

/// Equal up to one global phase, within `tol` in Frobenius norm.
template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                       double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  return phase_distance(a, b) <= tol;
}

/// `u^H u == I` within `tol` (max-entry).
template <typename Derived>
bool is_isometry(const Eigen::MatrixBase<Derived>& u, double tol) {
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace mbqc
