#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lomean/batch.hpp"
#include "lomean/io_json.hpp"
#include "lomean/order.hpp"

namespace lomean {

struct SuiteOptions {
  std::vector<int> dims = {2, 3, 4};
  int trials = 100;  // per dim (and per mean/function where applicable)
  std::uint64_t seed = 0;
  TolerancePolicy pol{};
  std::string function = "sqrt";
  ExecMode mode = ExecMode::Parallel;
  bool keep_records = true;  // per-check records in the report (summaries always kept)
};

/// Aggregated result of a verification suite. unexpected_failures counts
/// checks that were expected to hold and did not; wall_ms is excluded from
/// determinism comparisons.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int trials = 0;
  std::string function;
  std::size_t checks = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t unexpected_failures = 0;
  double wall_ms = 0.0;
  json records = json::array();
  json metrics = json::object();  // suite-specific summary values
  json witness;                   // replayable data for the worst failure, if any

  json to_json() const;
};

/// reverse_cauchy_residual over seeded PD pairs, every dim in dims x trials.
SuiteReport run_reverse_cauchy_suite(const SuiteOptions& opt);

/// hiai_ando_check over seeded PD pairs.
SuiteReport run_hiai_ando_suite(const SuiteOptions& opt);

/// hok_check with sigma_f induced by opt.function over seeded PD pairs;
/// the inequality is only expected when the AB + BA condition holds.
SuiteReport run_hok_suite(const SuiteOptions& opt);

/// Mean axioms: monotonicity in both arguments, the transformer identity for
/// invertible congruences, and I sigma I = I for random normalized discrete
/// representations.
SuiteReport run_means_axioms_suite(const SuiteOptions& opt);

/// Lemma 1/2 roundtrips over sqrt(2)-dominated pairs; metrics carry the worst
/// residuals seen.
SuiteReport run_lemma_roundtrips(const SuiteOptions& opt);

/// Chain shadow of the main characterization argument: for dominated pairs
/// with factors up to factor_max, every consecutive chain link satisfies
/// f(A_i) <= f(A_{i+1}) for each built-in operator monotone f, and the chain
/// length matches ceil(ln lmax / ln sqrt 2).
SuiteReport run_chain_shadow(const SuiteOptions& opt, double factor_max = 8.0);

/// Deterministic scalar fixtures: scalar_decompose reconstruction on a
/// 100x100 grid, h_inverse o h_eval roundtrip on 1e4 points, h monotonicity,
/// and scalar_min_bound consistency over the registry.
SuiteReport run_scalar_fixtures(const SuiteOptions& opt);

/// Umbrella for the CLI: runs lemma roundtrips, the chain shadow and the
/// scalar fixtures, merging counts.
SuiteReport run_constructions_suite(const SuiteOptions& opt);

/// Dispatch by suite name used by the CLI: reverse-cauchy, hiai-ando, hok,
/// means-axioms, constructions.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<std::string> suite_names();

}  // namespace lomean
