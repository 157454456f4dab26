// Information analysis of eavesdropping on the two-basis quNit key
// distribution protocol: Shannon information curves, the Bob/Eve crossing
// point, disturbed channel states, their decomposition into intermediate
// states, and a Monte Carlo of intercept/resend with intermediate-state
// projectors.
#pragma once

#include "mub.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>

namespace mubbell {

// Paired fidelity/disturbance bookkeeping for the two receivers of an
// asymmetric cloning attack.
struct ChannelParams {
  int dim = 0;
  double fidelity_bob = 1.0;
  double disturbance_bob = 0.0;
  double fidelity_eve = 1.0;
  double disturbance_eve = 0.0;

  static ChannelParams make(int dim, double f_bob, double f_eve) {
    require_dim(dim);
    if (f_bob < 0.0 || f_bob > 1.0 || f_eve < 0.0 || f_eve > 1.0)
      throw std::invalid_argument("ChannelParams: fidelity outside [0, 1]");
    return {dim, f_bob, 1.0 - f_bob, f_eve, 1.0 - f_eve};
  }

  static ChannelParams symmetric(int dim, double fidelity) {
    return make(dim, fidelity, fidelity);
  }
};

struct InfoPoint {
  double fidelity = 0.0;
  double info_bits = 0.0;
};

// Shannon information in bits per quNit over a channel that keeps the
// prepared basis state with probability `fidelity` and scatters uniformly
// over the other dim - 1 states otherwise. 0·log 0 counts as 0.
inline double shannon_info(double fidelity, int dim) {
  require_dim(dim);
  const double floor = 1.0 / dim;
  if (fidelity < floor - kSignificance || fidelity > 1.0 + kSignificance)
    throw std::invalid_argument("shannon_info: fidelity outside [1/dim, 1]");
  const double f = std::clamp(fidelity, floor, 1.0);
  const double g = 1.0 - f;
  double info = std::log2(static_cast<double>(dim));
  if (f > 0.0) info += f * std::log2(f);
  if (g > 0.0) info += g * std::log2(g / (dim - 1));
  return info;
}

// Information Eve gains per conclusive intermediate-projector measurement in
// the intercept/resend strategy.
inline double intercept_resend_info(int dim) {
  require_dim(dim);
  const double f = mub_success_prob(dim);
  const double d = mub_total_error(dim);
  return std::log2(static_cast<double>(dim)) + f * std::log2(f) + d * std::log2(d / (dim - 1));
}

struct CrossingPoint {
  double fidelity = 0.0;
  double disturbance = 0.0;
};

// Fidelity at which Bob's and Eve's information curves intersect under
// optimal symmetric cloning. Coincides with the intermediate-state success
// probability.
inline CrossingPoint crossing_fidelity(int dim) {
  require_dim(dim);
  const double f = 0.5 + 0.5 / std::sqrt(static_cast<double>(dim));
  return {f, 1.0 - f};
}

// Basis-diagonal mixed state left by a channel of the given fidelity when the
// undisturbed outcome would have been |a_n>.
inline cmat rho_disturbed(int n, double fidelity_bob, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw std::invalid_argument("rho_disturbed: index out of range");
  if (fidelity_bob < -kSignificance || fidelity_bob > 1.0 + kSignificance)
    throw std::invalid_argument("rho_disturbed: fidelity outside [0, 1]");
  if (fidelity_bob < 1.0 / dim - kSignificance)
    std::cerr << "warning[domain]: rho_disturbed fidelity " << fidelity_bob
              << " is below 1/dim; the channel is worse than guessing\n";
  const double f = std::clamp(fidelity_bob, 0.0, 1.0);
  cmat rho = cmat::Identity(dim, dim) * ((1.0 - f) / (dim - 1));
  rho(n, n) = f;
  return rho;
}

// Max-norm gap between the equal mixture of the intermediate states sharing
// first index n and the disturbed state at the crossing fidelity. Vanishes:
// at the crossing point the receiver's mixed state is exactly that mixture.
inline double crossing_decomposition_residual(int n, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim)
    throw std::invalid_argument("crossing_decomposition_residual: index out of range");
  const IntermediateFamily fam = intermediate_family(dim);
  cmat mix = cmat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) mix += fam.states[n][j].projector();
  mix /= static_cast<double>(dim);
  return max_abs(mix - rho_disturbed(n, crossing_fidelity(dim).fidelity, dim));
}

struct IRStats {
  int dim = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  long long conclusive_rounds = 0;
  double conclusive_fraction = 0.0;
  double eve_success_frequency = 0.0;  // among conclusive rounds
  double eve_info_bits = 0.0;          // plug-in mutual information estimate
  double bob_error_rate = 0.0;         // among conclusive rounds
};

namespace detail {

// SplitMix64 finalizer, used to derive independent per-batch engine seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic uniform draws on top of std::mt19937_64. The mappers are
// spelled out so a fixed seed yields the same stream on every platform.
class TrialStream {
 public:
  explicit TrialStream(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  int uniform_int(int bound) {
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = ~0ULL - ~0ULL % b;  // multiple of bound
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<int>(x % b);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

// Monte Carlo of intercept/resend with intermediate-state projectors. Per
// round: Alice emits one of the 2·dim basis states uniformly; Eve measures a
// uniformly chosen binary projector |m_kl><m_kl|. On outcome 1 she guesses
// a_k (if the preparation basis is later revealed as the computational one)
// or a'_l (Fourier) and resends |m_kl>; on outcome 0 the round is a loss.
// Bob measures the preparation basis on the resent state.
//
// Trials are processed in fixed-size batches with per-batch derived seeds, so
// a parallel partition of the batch range reproduces the serial statistics.
inline IRStats simulate_intercept_resend(int dim, long long trials, std::uint64_t seed) {
  require_dim(dim);
  if (trials < 1)
    throw std::invalid_argument("simulate_intercept_resend: trials must be >= 1");

  const MubPair mub = fourier_basis(dim);
  const IntermediateFamily fam = intermediate_family(dim);

  // Born probabilities from the constructed states. fire[b][v][k][l] is the
  // probability that projector m_kl fires on basis-b state v; bob_cdf holds,
  // for the same layout, the cumulative outcome distribution when Bob
  // measures basis b on the resent |m_kl>.
  const auto idx = [dim](int b, int v, int k, int l) {
    return static_cast<std::size_t>(((b * dim + v) * dim + k) * dim + l);
  };
  std::vector<double> fire(2 * static_cast<std::size_t>(dim) * dim * dim);
  std::vector<double> bob_cdf(fire.size());
  for (int b = 0; b < 2; ++b) {
    const auto& basis = (b == 0) ? mub.basis_a : mub.basis_a_prime;
    for (int k = 0; k < dim; ++k)
      for (int l = 0; l < dim; ++l) {
        double acc = 0.0;
        for (int v = 0; v < dim; ++v) {
          const double p = fam.states[k][l].overlap_prob(basis[v]);
          fire[idx(b, v, k, l)] = p;
          acc += p;
          bob_cdf[idx(b, v, k, l)] = acc;
        }
      }
  }

  long long conclusive = 0;
  long long eve_correct = 0;
  long long bob_errors = 0;
  std::vector<long long> joint(static_cast<std::size_t>(dim) * dim, 0);

  constexpr long long kBatch = 1LL << 16;
  const long long batches = (trials + kBatch - 1) / kBatch;
  for (long long batch = 0; batch < batches; ++batch) {
    detail::TrialStream rng(
        detail::mix64(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(batch + 1)));
    const long long hi = std::min(trials, (batch + 1) * kBatch);
    for (long long t = batch * kBatch; t < hi; ++t) {
      const int basis = rng.uniform_int(2);
      const int value = rng.uniform_int(dim);
      const int k = rng.uniform_int(dim);
      const int l = rng.uniform_int(dim);
      if (rng.uniform() >= fire[idx(basis, value, k, l)]) continue;  // round lost
      ++conclusive;
      const int guess = (basis == 0) ? k : l;
      if (guess == value) ++eve_correct;
      ++joint[static_cast<std::size_t>(value) * dim + guess];
      const double u = rng.uniform();
      int outcome = dim - 1;
      for (int v = 0; v < dim; ++v)
        if (u < bob_cdf[idx(basis, v, k, l)]) {
          outcome = v;
          break;
        }
      if (outcome != value) ++bob_errors;
    }
  }

  IRStats out;
  out.dim = dim;
  out.trials = trials;
  out.seed = seed;
  out.conclusive_rounds = conclusive;
  out.conclusive_fraction = static_cast<double>(conclusive) / trials;
  if (conclusive > 0) {
    out.eve_success_frequency = static_cast<double>(eve_correct) / conclusive;
    out.bob_error_rate = static_cast<double>(bob_errors) / conclusive;
    std::vector<double> pv(dim, 0.0), pg(dim, 0.0);
    for (int v = 0; v < dim; ++v)
      for (int g = 0; g < dim; ++g) {
        const double p = static_cast<double>(joint[static_cast<std::size_t>(v) * dim + g]) / conclusive;
        pv[v] += p;
        pg[g] += p;
      }
    double mi = 0.0;
    for (int v = 0; v < dim; ++v)
      for (int g = 0; g < dim; ++g) {
        const double p = static_cast<double>(joint[static_cast<std::size_t>(v) * dim + g]) / conclusive;
        if (p > 0.0) mi += p * std::log2(p / (pv[v] * pg[g]));
      }
    out.eve_info_bits = mi;
  }
  return out;
}

}  // namespace mubbell
