// Dense complex linear algebra at small dimension: Hermitian
// eigendecomposition, the principal square root of a unitary, Kronecker
// products, and trace inner products.
#pragma once

#include "types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <vector>

namespace mubbell {

struct HermitianEigen {
  rvec eigenvalues;                       // descending
  std::vector<StateVector> eigenvectors;  // same order, pairwise orthonormal
};

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
inline HermitianEigen eig_hermitian(const cmat& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<cmat> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  const Eigen::Index n = m.rows();
  HermitianEigen out;
  out.eigenvalues.resize(n);
  out.eigenvectors.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    out.eigenvectors.emplace_back(cvec(solver.eigenvectors().col(n - 1 - i)));
  }
  return out;
}

// Principal square root of a unitary: eigenphases are taken in (-pi, pi] and
// halved, the unique square root continuous at the identity. A unitary matrix
// is normal, so its Schur triangular factor is diagonal up to roundoff and the
// rebuilt root is unitary to machine precision.
inline cmat principal_unitary_sqrt(const cmat& u) {
  if (!is_unitary(u))
    throw std::invalid_argument("principal_unitary_sqrt: matrix is not unitary");
  Eigen::ComplexSchur<cmat> schur(u);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("principal_unitary_sqrt: Schur decomposition failed");
  const Eigen::Index n = u.rows();
  cvec roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double theta = std::arg(schur.matrixT()(i, i));
    if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;
    roots[i] = std::polar(1.0, theta / 2.0);
  }
  return schur.matrixU() * roots.asDiagonal() * schur.matrixU().adjoint();
}

// Re Tr(rho · p).
inline double trace_product(const cmat& rho, const cmat& p) {
  if (rho.rows() != rho.cols() || p.rows() != p.cols() || rho.rows() != p.rows())
    throw std::invalid_argument("trace_product: dimension mismatch");
  return rho.cwiseProduct(p.transpose()).sum().real();
}

inline cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace mubbell
