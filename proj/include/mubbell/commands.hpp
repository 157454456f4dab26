// Command layer behind the CLI: each command turns a run configuration into
// one table, deterministically for a fixed configuration.
#pragma once

#include "bell.hpp"
#include "eavesdrop.hpp"
#include "report.hpp"

#include <algorithm>

namespace mubbell {

struct RunConfig {
  enum class Command { bases, bell, lhv, curve, noise, efficiency, info, simulate, case3 };
  enum class Format { csv, json };

  Command command = Command::bell;
  int dim_lo = 0;  // inclusive range; a single dimension has dim_lo == dim_hi
  int dim_hi = 0;
  long long trials = 100000;
  std::uint64_t seed = 1;
  Format format = Format::csv;
};

namespace detail {

inline void require_dims(const RunConfig& c) {
  if (c.dim_lo < 2 || c.dim_hi < c.dim_lo)
    throw std::invalid_argument("dimension range must satisfy 2 <= lo <= hi");
}

inline void require_single_dim(const RunConfig& c) {
  require_dims(c);
  if (c.dim_lo != c.dim_hi)
    throw std::invalid_argument("this command takes a single dimension");
}

}  // namespace detail

// Per-dimension summary of the intermediate-state family: identification
// probabilities, completeness residual, and the worst gap between the
// tabulated states and the generic pair construction.
inline Table cmd_bases(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "fidelity", "error_per_state", "total_error",
               "povm_residual", "pair_construction_gap"};
  t.kinds = {CellKind::integer, CellKind::real, CellKind::real,
             CellKind::real, CellKind::real, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    const MubPair mub = fourier_basis(n);
    const IntermediateFamily fam = intermediate_family(n);
    double gap = 0.0;
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < n; ++k) {
        const StateVector via_pair =
            intermediate_of_pair(mub.basis_a[a], mub.basis_a_prime[k]);
        gap = std::max(gap, 1.0 - std::abs(via_pair.overlap(fam.states[a][k])));
      }
    t.add_row({static_cast<long long>(n), fam.success_prob, fam.error_prob_per_state,
               fam.total_error, povm_residual(n), gap});
  }
  return t;
}

inline Table cmd_bell(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "quantum_value", "lhv_max"};
  t.kinds = {CellKind::integer, CellKind::real, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    const MeasurementConfig cfg = standard_config(n);
    const cmat rho = max_entangled(n).projector();
    const CalibrationResult cal = calibrate_correlation_maps(cfg, rho);
    const BellFunctional f = BellFunctional::from_map(cal.map);
    t.add_row({static_cast<long long>(n), bell_value(rho, f, cfg), lhv_max(f)});
  }
  return t;
}

inline Table cmd_lhv(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "method", "value"};
  t.kinds = {CellKind::integer, CellKind::text, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n) {
    const BellFunctional f = BellFunctional::from_map(calibrate_correlation_maps(n).map);
    t.add_row({static_cast<long long>(n), std::string("fast"), lhv_max_fast(f)});
    if (n <= 3)
      t.add_row({static_cast<long long>(n), std::string("enumeration"), lhv_max_enumerate(f)});
  }
  return t;
}

// Crossing-point disturbance next to the disturbance at which the Bell
// violation stops; the two coincide only in dimension two.
inline Table cmd_curve(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "d_crossing", "d_critical"};
  t.kinds = {CellKind::integer, CellKind::real, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    t.add_row({static_cast<long long>(n), crossing_fidelity(n).disturbance,
               critical_disturbance(n)});
  return t;
}

inline Table cmd_noise(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "lambda_mix", "lambda_sep"};
  t.kinds = {CellKind::integer, CellKind::real, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    t.add_row({static_cast<long long>(n), lambda_mix(n), lambda_sep(n)});
  return t;
}

inline Table cmd_efficiency(const RunConfig& c) {
  detail::require_dims(c);
  Table t;
  t.columns = {"n_dim", "eta_threshold"};
  t.kinds = {CellKind::integer, CellKind::real};
  for (int n = c.dim_lo; n <= c.dim_hi; ++n)
    t.add_row({static_cast<long long>(n), detector_threshold(n)});
  return t;
}

// Bob's information as a function of his fidelity, next to the constant
// information an intercept/resend eavesdropper extracts. The sampled grid
// contains the exact crossing fidelity, flagged in the last column; there the
// two columns agree.
inline Table cmd_info(const RunConfig& c) {
  detail::require_single_dim(c);
  const int n = c.dim_lo;
  const double eve = intercept_resend_info(n);
  const double cross = crossing_fidelity(n).fidelity;
  constexpr int kSteps = 100;
  std::vector<double> grid;
  grid.reserve(kSteps + 2);
  for (int i = 0; i <= kSteps; ++i)
    grid.push_back(1.0 / n + (1.0 - 1.0 / n) * i / kSteps);
  grid.push_back(cross);
  std::sort(grid.begin(), grid.end());
  Table t;
  t.columns = {"n_dim", "fidelity", "info_bob", "info_eve_intercept", "at_crossing"};
  t.kinds = {CellKind::integer, CellKind::real, CellKind::real, CellKind::real,
             CellKind::integer};
  for (double f : grid)
    t.add_row({static_cast<long long>(n), f, shannon_info(f, n), eve,
               static_cast<long long>(f == cross ? 1 : 0)});
  return t;
}

inline Table cmd_simulate(const RunConfig& c) {
  detail::require_single_dim(c);
  const IRStats s = simulate_intercept_resend(c.dim_lo, c.trials, c.seed);
  Table t;
  t.columns = {"n_dim", "trials", "seed", "conclusive_fraction",
               "eve_success_frequency", "eve_info_bits", "bob_error_rate"};
  t.kinds = {CellKind::integer, CellKind::integer, CellKind::integer, CellKind::real,
             CellKind::real, CellKind::real, CellKind::real};
  t.add_row({static_cast<long long>(s.dim), s.trials, static_cast<long long>(s.seed),
             s.conclusive_fraction, s.eve_success_frequency, s.eve_info_bits,
             s.bob_error_rate});
  return t;
}

inline Table cmd_case3(const RunConfig&) {
  Table t;
  t.columns = {"case", "metric", "value"};
  t.kinds = {CellKind::text, CellKind::text, CellKind::real};
  for (const CaseReport& rep : {real_basis_case3(), basis_variant_case3()})
    for (const auto& [key, value] : rep.metrics) t.add_row({rep.name, key, value});
  return t;
}

inline Table run_command(const RunConfig& c) {
  switch (c.command) {
    case RunConfig::Command::bases: return cmd_bases(c);
    case RunConfig::Command::bell: return cmd_bell(c);
    case RunConfig::Command::lhv: return cmd_lhv(c);
    case RunConfig::Command::curve: return cmd_curve(c);
    case RunConfig::Command::noise: return cmd_noise(c);
    case RunConfig::Command::efficiency: return cmd_efficiency(c);
    case RunConfig::Command::info: return cmd_info(c);
    case RunConfig::Command::simulate: return cmd_simulate(c);
    case RunConfig::Command::case3: return cmd_case3(c);
  }
  throw std::logic_error("run_command: unknown command");
}

inline std::string render(const Table& t, RunConfig::Format format) {
  return format == RunConfig::Format::csv ? to_csv(t) : to_json(t);
}

}  // namespace mubbell
