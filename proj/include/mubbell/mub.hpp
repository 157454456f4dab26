// The computational/Fourier pair of mutually unbiased bases in dimension N,
// the N^2 intermediate (Breidbart) states between them, their identification
// probabilities, overlaps, and the completeness relation of the associated
// binary measurements.
#pragma once

#include "linalg.hpp"

#include <vector>

namespace mubbell {

// Probability that an intermediate state identifies either of its parents.
inline double mub_success_prob(int dim) {
  return 0.5 + 0.5 / std::sqrt(static_cast<double>(dim));
}

// Total misidentification probability, spread evenly over the other dim - 1
// basis states.
inline double mub_total_error(int dim) {
  return 0.5 - 0.5 / std::sqrt(static_cast<double>(dim));
}

// exp(2 pi i e / dim) with the exponent reduced modulo dim first, so large
// index products lose no precision in the angle.
inline complexd unit_phase(long long e, int dim) {
  const long long r = ((e % dim) + dim) % dim;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / dim);
}

struct MubPair {
  int dim = 0;
  std::vector<StateVector> basis_a;        // computational
  std::vector<StateVector> basis_a_prime;  // Fourier transform of basis_a
};

// The pair {computational basis, its Fourier transform}. Every cross overlap
// has modulus 1/sqrt(dim): <a_n|a'_k> = exp(2 pi i kn / dim) / sqrt(dim).
inline MubPair fourier_basis(int dim) {
  require_dim(dim);
  MubPair out;
  out.dim = dim;
  out.basis_a.reserve(dim);
  out.basis_a_prime.reserve(dim);
  for (int n = 0; n < dim; ++n) out.basis_a.push_back(StateVector::basis_state(dim, n));
  const double root = std::sqrt(static_cast<double>(dim));
  for (int k = 0; k < dim; ++k) {
    cvec v(dim);
    for (int n = 0; n < dim; ++n) v[n] = unit_phase(static_cast<long long>(k) * n, dim) / root;
    out.basis_a_prime.emplace_back(std::move(v));
  }
  return out;
}

// The state halfway between |a_n> and the Fourier state |a'_k>: it has the
// same, maximal overlap with both. The relative phase in the superposition is
// the phase of the cross overlap.
inline StateVector intermediate_state(int n, int k, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim || k < 0 || k >= dim)
    throw std::invalid_argument("intermediate_state: index out of range");
  const double root = std::sqrt(static_cast<double>(dim));
  const double norm_sq = 2.0 * (1.0 + 1.0 / root);
  cvec v(dim);
  for (int j = 0; j < dim; ++j)
    v[j] = unit_phase(static_cast<long long>(k) * j, dim) / root;
  v[n] += unit_phase(static_cast<long long>(k) * n, dim);
  v /= std::sqrt(norm_sq);
  return StateVector(std::move(v));
}

// Halfway state between two arbitrary non-orthogonal states. The two square
// roots are taken as a conjugate pair: for overlap phases in (-pi, pi) this
// equals the principal branch on both factors, and at phase pi it keeps the
// result on the top eigenvector of the pair mixture instead of jumping to the
// orthogonal ray.
inline StateVector intermediate_of_pair(const StateVector& alpha, const StateVector& beta) {
  const complexd ov = alpha.overlap(beta);
  const double r = std::abs(ov);
  if (r <= kSignificance)
    throw std::invalid_argument("intermediate_of_pair: inputs are orthogonal");
  const complexd root_ab = std::sqrt(ov);
  const complexd root_ba = std::conj(root_ab);
  cvec v = root_ab * alpha.amplitudes() + root_ba * beta.amplitudes();
  v /= std::sqrt(2.0 * (r + r * r));
  return StateVector(std::move(v));
}

// Intermediate state of any number of states: the top eigenvector of their
// equal-weight mixture. Rejects a degenerate top eigenvalue, for which no
// single intermediate direction exists.
inline StateVector intermediate_via_mixture(const std::vector<StateVector>& states) {
  if (states.size() < 2)
    throw std::invalid_argument("intermediate_via_mixture: need at least two states");
  const Eigen::Index d = states.front().dim();
  cmat mix = cmat::Zero(d, d);
  for (const auto& s : states) {
    if (s.dim() != d)
      throw std::invalid_argument("intermediate_via_mixture: dimension mismatch");
    mix += s.projector();
  }
  mix /= static_cast<double>(states.size());
  const HermitianEigen eig = eig_hermitian(mix);
  if (d > 1 && eig.eigenvalues[0] - eig.eigenvalues[1] <= kAlgebraTol)
    throw std::invalid_argument("intermediate_via_mixture: top eigenvalue is degenerate");
  return eig.eigenvectors.front();
}

// Closed form of <m_kl|m_nm>. Intermediate states are not orthogonal in
// general; dimension two is the exception.
inline complexd m_overlap(int k, int l, int n, int m, int dim) {
  require_dim(dim);
  if (k < 0 || k >= dim || l < 0 || l >= dim || n < 0 || n >= dim || m < 0 || m >= dim)
    throw std::invalid_argument("m_overlap: index out of range");
  const double root = std::sqrt(static_cast<double>(dim));
  const double norm_sq = 2.0 * (1.0 + 1.0 / root);
  complexd sum = 0.0;
  if (k == n)
    sum += root * unit_phase(static_cast<long long>(m) * n - static_cast<long long>(l) * k, dim);
  if (l == m) sum += root;
  sum += unit_phase(static_cast<long long>(m - l) * k, dim);
  sum += unit_phase(static_cast<long long>(m - l) * n, dim);
  return sum / (root * norm_sq);
}

struct IntermediateFamily {
  int dim = 0;
  std::vector<std::vector<StateVector>> states;  // states[n][k]
  double success_prob = 0.0;          // overlap^2 with either parent
  double error_prob_per_state = 0.0;  // overlap^2 with any other basis state
  double total_error = 0.0;
};

inline IntermediateFamily intermediate_family(int dim) {
  require_dim(dim);
  IntermediateFamily fam;
  fam.dim = dim;
  fam.success_prob = mub_success_prob(dim);
  fam.total_error = mub_total_error(dim);
  fam.error_prob_per_state = fam.total_error / (dim - 1);
  fam.states.resize(dim);
  for (int n = 0; n < dim; ++n) {
    fam.states[n].reserve(dim);
    for (int k = 0; k < dim; ++k) fam.states[n].push_back(intermediate_state(n, k, dim));
  }
  return fam;
}

// Max-norm distance of (1/dim) sum_{n,k} |m_nk><m_nk| from the identity. The
// scaled family is a complete generalized measurement, so this vanishes.
inline double povm_residual(int dim) {
  require_dim(dim);
  const IntermediateFamily fam = intermediate_family(dim);
  cmat sum = cmat::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    for (int k = 0; k < dim; ++k) sum += fam.states[n][k].projector();
  sum /= static_cast<double>(dim);
  return max_abs(sum - cmat::Identity(dim, dim));
}

}  // namespace mubbell
