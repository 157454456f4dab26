// Shared scalar/vector/matrix aliases, tolerances, and the canonical-phase
// state vector used by every module.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>

namespace mubbell {

using complexd = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;

// Algebraic identities are checked to kAlgebraTol, validity flags (unitary,
// Hermitian, unbiased) to kFlagTol, and amplitudes below kSignificance are
// treated as zero.
inline constexpr double kAlgebraTol = 1e-9;
inline constexpr double kFlagTol = 1e-10;
inline constexpr double kSignificance = 1e-12;

// Entrywise max norm.
inline double max_abs(const cmat& m) { return m.cwiseAbs().maxCoeff(); }

inline bool is_hermitian(const cmat& m, double tol = kFlagTol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

inline bool is_unitary(const cmat& m, double tol = kFlagTol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - cmat::Identity(m.rows(), m.cols())) <= tol;
}

inline void require_dim(int dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be at least 2");
}

// Unit-norm complex amplitude vector with a canonical global phase: the first
// component of modulus above kSignificance is made real and non-negative, so
// two vectors on the same ray compare equal componentwise.
class StateVector {
 public:
  explicit StateVector(cvec amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0)
      throw std::invalid_argument("StateVector: empty amplitude vector");
    const double norm = amps_.norm();
    if (norm <= kSignificance)
      throw std::invalid_argument("StateVector: zero-norm amplitude vector");
    amps_ /= norm;
    canonicalize_phase(amps_);
  }

  static StateVector basis_state(Eigen::Index dim, Eigen::Index index) {
    if (dim <= 0 || index < 0 || index >= dim)
      throw std::invalid_argument("StateVector::basis_state: index out of range");
    cvec v = cvec::Zero(dim);
    v[index] = 1.0;
    return StateVector(std::move(v));
  }

  Eigen::Index dim() const { return amps_.size(); }
  const cvec& amplitudes() const { return amps_; }
  complexd operator[](Eigen::Index i) const { return amps_[i]; }

  // <this|other>
  complexd overlap(const StateVector& other) const {
    if (other.dim() != dim())
      throw std::invalid_argument("StateVector::overlap: dimension mismatch");
    return amps_.dot(other.amps_);
  }

  // |<this|other>|^2
  double overlap_prob(const StateVector& other) const {
    return std::norm(overlap(other));
  }

  cmat projector() const { return amps_ * amps_.adjoint(); }

  static void canonicalize_phase(cvec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      const double mag = std::abs(v[i]);
      if (mag > kSignificance) {
        v *= std::conj(v[i]) / mag;
        v[i] = mag;  // remove the residual imaginary part exactly
        break;
      }
    }
  }

 private:
  cvec amps_;
};

// (u ⊗ v)_{i·dim(v)+j} = u_i v_j. The result inherits unit norm and a
// canonical phase from its factors.
inline StateVector tensor(const StateVector& u, const StateVector& v) {
  cvec out(u.dim() * v.dim());
  for (Eigen::Index i = 0; i < u.dim(); ++i)
    for (Eigen::Index j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  return StateVector(std::move(out));
}

}  // namespace mubbell
