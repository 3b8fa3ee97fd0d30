// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Each criterion pins its trial counts, dimensions and tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lomean/constructions.hpp"
#include "lomean/generators.hpp"
#include "lomean/inequalities.hpp"
#include "lomean/monotonicity.hpp"
#include "lomean/spectral.hpp"
#include "lomean/suites.hpp"

using namespace lomean;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool pass, double ms) {
  std::printf("%s  criterion %d: %s  (%.0f ms)\n", pass ? "PASS" : "FAIL", number, label.c_str(),
              ms);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

template <class Fn>
void criterion(int number, const std::string& label, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
    pass = false;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report(number, label, pass, ms);
}

constexpr std::uint64_t kSeed = 20240817;

// 1. Reverse Cauchy: residual min eigenvalue >= -1e-8 * spectral scale for
//    every mean generator in the theorem's family, dims 2..8, 1000 pairs each.
bool criterion1() {
  bool ok = true;
  for (const char* fname : {"power:0.3", "sqrt", "harmonic", "logmean"}) {
    SuiteOptions opt;
    opt.dims = {2, 3, 4, 5, 6, 7, 8};
    opt.trials = 1000;
    opt.seed = kSeed;
    opt.pol.rel = 1e-8;
    opt.function = fname;
    opt.keep_records = false;
    const SuiteReport rep = run_reverse_cauchy_suite(opt);
    if (rep.unexpected_failures != 0) {
      std::printf("      %s: %zu unexpected failures of %zu checks\n", fname,
                  rep.unexpected_failures, rep.checks);
      ok = false;
    }
  }
  return ok;
}

// 2. Lemma 1/2 roundtrips: 500 dominated pairs per dim in 2..6 with
//    mean_residual <= 1e-10 and reconstruction_residual <= 1e-7 (relative).
bool criterion2() {
  SuiteOptions opt;
  opt.dims = {2, 3, 4, 5, 6};
  opt.trials = 500;
  opt.seed = kSeed + 1;
  opt.keep_records = false;
  const SuiteReport rep = run_lemma_roundtrips(opt);
  if (rep.unexpected_failures != 0) {
    std::printf("      %zu unexpected failures; worst mean %.3e, worst reconstruction %.3e\n",
                rep.unexpected_failures, rep.metrics.value("worst_lemma2_mean_residual", 0.0),
                rep.metrics.value("worst_lemma2_reconstruction", 0.0));
    return false;
  }
  return true;
}

// 3. Chain shadow: 200 dominated pairs with factors up to 8; every built-in
//    operator monotone f satisfies f(A_i) <= f(A_{i+1}) at every link
//    (tol 1e-8 relative) and the chain length matches the ceiling formula.
bool criterion3() {
  SuiteOptions opt;
  opt.dims = {2, 3, 4, 5};
  opt.trials = 200;
  opt.seed = kSeed + 2;
  opt.pol.rel = 1e-8;
  opt.keep_records = false;
  const SuiteReport rep = run_chain_shadow(opt, 8.0);
  if (rep.unexpected_failures != 0) {
    std::printf("      %zu unexpected failures of %zu checks\n", rep.unexpected_failures,
                rep.checks);
    return false;
  }
  return true;
}

// 4. Non-monotone detection: square, cube and exp are flagged within the
//    default budget and the stored witness replays below -1e-6; the fixed
//    2x2 witness for t^2 validates.
bool criterion4() {
  bool ok = true;
  for (const char* fname : {"square", "cube", "exp"}) {
    MonotoneConfig cfg;
    cfg.seed = kSeed + 3;
    const ScalarFunction f = lookup_function(fname);
    const MonotonicityVerdict v = numeric_operator_monotone(f, cfg);
    if (!v.violated) {
      std::printf("      %s: no violation within the default budget\n", fname);
      ok = false;
      continue;
    }
    double replayed = 0.0;
    if (v.counterexample.kind == Counterexample::Kind::PointSet) {
      replayed = min_eigenvalue(loewner_matrix(f, v.counterexample.points));
    } else {
      replayed = min_eigenvalue(apply_spectral(f.eval, v.counterexample.b) -
                                apply_spectral(f.eval, v.counterexample.a));
    }
    if (!(replayed < -1e-6)) {
      std::printf("      %s: witness replay gives %.3e, expected < -1e-6\n", fname, replayed);
      ok = false;
    }
  }

  // fixed witness: A = [[1,1],[1,1]], B = [[2,1],[1,1]]
  Matrix am(2), bm(2);
  am(0, 0) = am(0, 1) = am(1, 0) = am(1, 1) = 1.0;
  bm(0, 0) = 2.0;
  bm(0, 1) = bm(1, 0) = bm(1, 1) = 1.0;
  const HermitianMatrix a = symmetrize(am), b = symmetrize(bm);
  const ScalarFunction sq = lookup_function("square");
  const bool dominated = min_eigenvalue(b - a) >= -1e-15;
  const auto sd = spectral_decompose(apply_spectral(sq.eval, b) - apply_spectral(sq.eval, a));
  const double det = sd.eigenvalues.front() * sd.eigenvalues.back();
  if (!(dominated && std::abs(det + 1.0) < 1e-10 && sd.eigenvalues.front() < -1e-6)) {
    std::printf("      fixed witness: dominated=%d det=%.12f min=%.3e\n", dominated, det,
                sd.eigenvalues.front());
    ok = false;
  }
  return ok;
}

// 5. Symmetric-mean obstruction: a failing angle exists for every alpha < 1
//    tested, the empirical threshold decreases with alpha, and alpha = 1
//    holds everywhere.
bool criterion5() {
  bool ok = true;
  double prev_threshold = 10.0;
  for (double alpha : {0.5, 0.9, 0.99}) {
    const double thr = obstruction_threshold(alpha);
    bool failing_theta_found = false;
    for (int i = 1; i <= 64 && !failing_theta_found; ++i) {
      const double theta = thr * i / 65.0;
      if (theta <= 0.0) break;
      const ObstructionRecord rec = projection_obstruction(alpha, theta);
      failing_theta_found = !rec.holds && rec.entry_bound_fails;
    }
    if (!failing_theta_found) {
      std::printf("      alpha=%.2f: no failing theta found below %.4f\n", alpha, thr);
      ok = false;
    }
    if (!(thr < prev_threshold)) {
      std::printf("      alpha=%.2f: threshold %.6f not below previous %.6f\n", alpha, thr,
                  prev_threshold);
      ok = false;
    }
    prev_threshold = thr;
  }
  for (int i = 1; i <= 64; ++i) {
    const double theta = 1.5707963267948966 * i / 65.0;
    if (!projection_obstruction(1.0, theta).holds) {
      std::printf("      alpha=1: inequality failed at theta=%.4f\n", theta);
      ok = false;
    }
  }
  return ok;
}

// 6. Oracle agreement across the nine registry functions: the Loewner-based
//    numeric oracle and the characterization-hypothesis search return the
//    same verdict, and the verdict matches the function's known status.
bool criterion6() {
  bool ok = true;
  for (const std::string& name : registry_names()) {
    MonotoneConfig cfg;
    cfg.seed = kSeed + 4;
    const ScalarFunction f = lookup_function(name);
    const MonotonicityVerdict v = characterize_via_hypothesis(f, cfg);
    const bool expect_violation = !f.claims_operator_monotone;
    if (!v.oracles_agree || v.violated != expect_violation) {
      std::printf("      %s: hypothesis=%s numeric=%s expected=%s\n", name.c_str(),
                  v.violated ? "violated" : "consistent",
                  v.numeric_violated ? "violated" : "consistent",
                  expect_violation ? "violated" : "consistent");
      ok = false;
    }
  }
  return ok;
}

// 7. Scalar fixtures: decomposition grid exact to 1e-12, h roundtrip to
//    1e-12 on 1e4 points, min-bound agreement across the registry.
bool criterion7() {
  SuiteOptions opt;
  opt.seed = kSeed + 5;
  const SuiteReport rep = run_scalar_fixtures(opt);
  if (rep.unexpected_failures != 0) {
    std::printf("      %zu unexpected failures; decompose worst %.3e, h roundtrip worst %.3e\n",
                rep.unexpected_failures, rep.metrics.value("scalar_decompose_worst", 0.0),
                rep.metrics.value("h_roundtrip_worst", 0.0));
    return false;
  }
  return true;
}

// 8. Means axioms: monotonicity and the transformer inequality on 500 seeded
//    quadruples per mean; I sigma I = I to 1e-10 on 100 random discrete
//    representations.
bool criterion8() {
  SuiteOptions opt;
  opt.dims = {2, 3, 4};
  opt.trials = 500;
  opt.seed = kSeed + 6;
  opt.keep_records = false;
  const SuiteReport rep = run_means_axioms_suite(opt);
  if (rep.unexpected_failures != 0) {
    std::printf("      %zu unexpected failures of %zu checks (worst identity deviation %.3e)\n",
                rep.unexpected_failures, rep.checks,
                rep.metrics.value("worst_identity_deviation", 0.0));
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "reverse Cauchy holds for the monotone family (dims 2-8, 1000 pairs each)",
            criterion1);
  criterion(2, "lemma 1/2 roundtrips (dims 2-6, 500 pairs, 1e-10 / 1e-7)", criterion2);
  criterion(3, "chain shadow: f-monotone links and exact chain length (200 pairs)", criterion3);
  criterion(4, "non-monotone detection with replaying witnesses (square, cube, exp)", criterion4);
  criterion(5, "projection obstruction: failing angles and decreasing threshold", criterion5);
  criterion(6, "oracle agreement across the nine registry functions", criterion6);
  criterion(7, "scalar fixtures: decomposition grid, h roundtrip, min bound", criterion7);
  criterion(8, "means axioms on 500 quadruples per mean; I sigma I = I", criterion8);

  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
