// Acceptance suite: one line per criterion, each checked at its fixed
// tolerance. Exits nonzero if any criterion fails.

#include <mubbell/mubbell.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace mubbell;

namespace {

int failures = 0;

void report(int id, const char* label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id, label, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = f(mid);
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// 1. Quantum value 2 sqrt(N) for N = 2..12, within 1e-9, in under 10 s.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const MeasurementConfig cfg = standard_config(n);
    const cmat rho = max_entangled(n).projector();
    const CalibrationResult cal = calibrate_correlation_maps(cfg, rho);
    const BellFunctional f = BellFunctional::from_map(cal.map);
    worst = std::max(worst, std::abs(bell_value(rho, f, cfg) - 2.0 * std::sqrt(double(n))));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "quantum value 2*sqrt(N), N = 2..12", worst <= 1e-9 && secs < 10.0,
         "max deviation " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. Local bound: enumeration gives exactly 2 for N = 2, 3; fast path 2 for
//    N <= 12 and equal to enumeration where both run.
void criterion2() {
  bool ok = true;
  const double e2 = lhv_max_enumerate(BellFunctional::from_map(calibrate_correlation_maps(2).map));
  const double e3 = lhv_max_enumerate(BellFunctional::from_map(calibrate_correlation_maps(3).map));
  ok = ok && e2 == 2.0 && e3 == 2.0;
  double worst_fast = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const double fast =
        lhv_max_fast(BellFunctional::from_map(calibrate_correlation_maps(n).map));
    worst_fast = std::max(worst_fast, std::abs(fast - 2.0));
    if (n == 2) ok = ok && fast == e2;
    if (n == 3) ok = ok && fast == e3;
  }
  ok = ok && worst_fast == 0.0;
  report(2, "local bound 2 (64 and 4608 strategies enumerated; fast path N <= 12)", ok,
         "enum N=2: " + fmt(e2) + ", N=3: " + fmt(e3) + ", fast max |. - 2| " + fmt(worst_fast));
}

// 3. Crossing decomposition residual <= 1e-9 for all n, N <= 16.
void criterion3() {
  double worst = 0.0;
  for (int n = 2; n <= 16; ++n)
    for (int a = 0; a < n; ++a) worst = std::max(worst, crossing_decomposition_residual(a, n));
  report(3, "crossing-point decomposition into intermediate states, N <= 16", worst <= 1e-9,
         "max residual " + fmt(worst));
}

// 4. Completeness residual <= 1e-9 for N <= 16.
void criterion4() {
  double worst = 0.0;
  for (int n = 2; n <= 16; ++n) worst = std::max(worst, povm_residual(n));
  report(4, "projector-family completeness, N <= 16", worst <= 1e-9,
         "max residual " + fmt(worst));
}

// 5. Intercept/resend information equals the crossing-point information
//    within 1e-12 for N <= 16; the N = 2 value matches the frozen oracle.
void criterion5() {
  double worst = 0.0;
  for (int n = 2; n <= 16; ++n)
    worst = std::max(worst, std::abs(intercept_resend_info(n) -
                                     shannon_info(crossing_fidelity(n).fidelity, n)));
  const double dev2 = std::abs(intercept_resend_info(2) - 0.3991239633071439);
  report(5, "information identity at the crossing point, N <= 16",
         worst <= 1e-12 && dev2 <= 1e-12,
         "max identity gap " + fmt(worst) + ", N=2 value gap " + fmt(dev2));
}

// 6. Critical disturbance: equals the crossing disturbance at N = 2 within
//    1e-12, lies strictly below it for N = 3..25, and the closed form matches
//    the channel-numeric value within 1e-9 on a 50-point grid for N <= 8.
void criterion6() {
  const double gap2 = std::abs(critical_disturbance(2) - crossing_fidelity(2).disturbance);
  bool ordered = true;
  for (int n = 3; n <= 25; ++n)
    ordered = ordered && critical_disturbance(n) < crossing_fidelity(n).disturbance;
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const MeasurementConfig cfg = standard_config(n);
    const BellFunctional f =
        BellFunctional::from_map(calibrate_correlation_maps(cfg, max_entangled(n).projector()).map);
    const double hi = 1.0 - 1.0 / n;
    for (int i = 0; i < 50; ++i) {
      const double db = hi * i / 49.0;
      worst = std::max(worst, std::abs(bell_value(disturbed_shared_state(db, n), f, cfg) -
                                       disturbance_bell(db, n)));
    }
  }
  report(6, "disturbance curve: N=2 coincidence, ordering, channel check",
         gap2 <= 1e-12 && ordered && worst <= 1e-9,
         "N=2 gap " + fmt(gap2) + ", grid max deviation " + fmt(worst));
}

// 7. Noise thresholds in dimension three, each confirmed as the numeric
//    crossover of the Bell value through 2 within 1e-9.
void criterion7() {
  const MeasurementConfig cfg = standard_config(3);
  const BellFunctional f =
      BellFunctional::from_map(calibrate_correlation_maps(cfg, max_entangled(3).projector()).map);
  const double mix_closed = lambda_mix(3);
  const double sep_closed = lambda_sep(3);
  const double mix_root = bisect(
      [&](double lam) { return bell_value(rho_uncolored(lam, 3), f, cfg) - 2.0; }, 0.0, 1.0,
      1e-12);
  const double sep_root = bisect(
      [&](double lam) { return bell_value(rho_colored(lam, 3), f, cfg) - 2.0; }, 0.0, 1.0, 1e-12);
  const bool ok = std::abs(mix_closed - 0.73205080756887729) <= 1e-9 &&
                  std::abs(sep_closed - 0.46410161513775459) <= 1e-9 &&
                  std::abs(mix_closed - mix_root) <= 1e-9 &&
                  std::abs(sep_closed - sep_root) <= 1e-9;
  report(7, "noise thresholds lambda_mix(3), lambda_sep(3) with numeric crossover", ok,
         "mix " + fmt(mix_closed) + " vs root " + fmt(mix_root) + ", sep " + fmt(sep_closed) +
             " vs root " + fmt(sep_root));
}

// 8. Detector efficiency: frozen values at N = 2 and 4, ratio-formula root
//    within 1e-10, monotone for N = 5..100.
void criterion8() {
  const double gap2 = std::abs(detector_threshold(2) - 0.82842712474619010);
  const double gap4 = std::abs(detector_threshold(4) - 0.8);
  double worst_root = 0.0;
  for (int n : {2, 3, 4, 7, 16}) {
    const double root = bisect(
        [n](double eta) { return detector_bell_ratio(eta, n) - 2.0; }, 0.05, 1.0, 1e-13);
    worst_root = std::max(worst_root, std::abs(root - detector_threshold(n)));
  }
  bool monotone = true;
  for (int n = 5; n < 100; ++n)
    monotone = monotone && detector_threshold(n + 1) > detector_threshold(n);
  report(8, "detector efficiency threshold: values, root check, monotonicity",
         gap2 <= 1e-12 && gap4 <= 1e-12 && worst_root <= 1e-10 && monotone,
         "N=2 gap " + fmt(gap2) + ", N=4 gap " + fmt(gap4) + ", root gap " + fmt(worst_root));
}

// 9. Three-dimensional variants: block probabilities, both 10/3 values, the
//    twelve-term quantum value 4 and its enumerated local bound 3.
void criterion9() {
  bool ok = true;
  std::string detail;
  try {
    const CaseReport real = real_basis_case3();
    const CaseReport basis = basis_variant_case3();
    const double tol = 1e-9;
    ok = ok && std::abs(real.metric("p_m0_a") - 5.0 / 6.0) <= tol;
    ok = ok && std::abs(real.metric("p_m1_a") - 4.0 / 6.0) <= tol;
    ok = ok && std::abs(real.metric("bell_value") - 10.0 / 3.0) <= tol;
    for (const char* key : {"p_m0b_a", "p_m1b_a", "p_m2b_a", "p_m0b_aprime", "p_m1b_aprime",
                            "p_m2b_aprime"})
      ok = ok && std::abs(basis.metric(key) - 7.0 / 9.0) <= tol;
    ok = ok && std::abs(basis.metric("b3b_value") - 10.0 / 3.0) <= tol;
    ok = ok && std::abs(basis.metric("s12_value") - 4.0) <= tol;
    ok = ok && basis.metric("s12_lhv") == 3.0;
    detail = "B3 " + fmt(real.metric("bell_value")) + ", B3b " + fmt(basis.metric("b3b_value")) +
             ", S12 " + fmt(basis.metric("s12_value")) + ", S12 local bound " +
             fmt(basis.metric("s12_lhv"));
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(9, "dimension-three variants: real basis and basis measurements", ok, detail);
}

// 10. Monte Carlo at one million trials: the conclusive-round success
//     frequency lies within four binomial standard deviations of the
//     intermediate-state fidelity for N = 2, 3, 5, and a fixed seed
//     reproduces identical output bytes.
void criterion10() {
  bool ok = true;
  double worst_sigmas = 0.0;
  for (int n : {2, 3, 5}) {
    const IRStats s = simulate_intercept_resend(n, 1000000, 2026);
    const double f = mub_success_prob(n);
    const double sigma = std::sqrt(f * (1.0 - f) / s.conclusive_rounds);
    const double sigmas = std::abs(s.eve_success_frequency - f) / sigma;
    worst_sigmas = std::max(worst_sigmas, sigmas);
    ok = ok && sigmas <= 4.0;
  }
  RunConfig cfg;
  cfg.command = RunConfig::Command::simulate;
  cfg.dim_lo = cfg.dim_hi = 2;
  cfg.trials = 1000000;
  cfg.seed = 7;
  const std::string once = render(run_command(cfg), RunConfig::Format::csv);
  const std::string twice = render(run_command(cfg), RunConfig::Format::csv);
  ok = ok && once == twice;
  report(10, "Monte Carlo convergence (1e6 trials, N = 2, 3, 5) and reproducibility", ok,
         "worst deviation " + fmt(worst_sigmas) + " sigma, byte-identical " +
             (once == twice ? "yes" : "no"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
