#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lomean/batch.hpp"
#include "lomean/matrix.hpp"
#include "lomean/means.hpp"
#include "lomean/order.hpp"
#include "lomean/scalar_function.hpp"

namespace lomean {

/// Search configuration shared by the monotonicity oracles.
struct MonotoneConfig {
  double t_min = 1e-2;
  double t_max = 1e2;
  int n_max = 8;                    // largest Loewner-matrix point set
  std::vector<int> dims = {2, 3, 4};
  int trials = 10000;               // budget per phase
  std::uint64_t seed = 0;

  std::string digest() const;
};

/// Replayable witness of a monotonicity violation.
struct Counterexample {
  enum class Kind { None, PointSet, MatrixPair, HypothesisPair };
  Kind kind = Kind::None;
  std::vector<double> points;  // PointSet
  HermitianMatrix a;           // MatrixPair / HypothesisPair
  HermitianMatrix b;
  double min_eig = 0.0;  // witnessing eigenvalue (of the Loewner matrix or residual)
  long long trial_index = -1;
  std::uint64_t trial_seed = 0;
};

/// Outcome of a monotonicity search. "consistent" means no violation within
/// the budget; it is never a proof.
struct MonotonicityVerdict {
  bool violated = false;
  Counterexample counterexample;
  std::size_t trials_run = 0;
  std::string config_digest;

  // Filled by characterize_via_hypothesis: verdict of the independent numeric
  // oracle on the same function and whether the two verdicts agree.
  bool cross_checked = false;
  bool numeric_violated = false;
  bool oracles_agree = true;
};

/// Divided-difference matrix [(f(p_i)-f(p_j))/(p_i-p_j)] with central
/// finite-difference derivatives f'(p_i) on the diagonal
/// (step max(1e-6, 1e-6 p_i)). PSD across all point sets iff f is operator
/// monotone. Points must be positive with pairwise gaps > 1e-8.
HermitianMatrix loewner_matrix(const ScalarFunction& f, const std::vector<double>& points);

/// Phase (a): Loewner-matrix PSD tests on random log-uniform point sets of
/// sizes 2..n_max. Phase (b): matrix-pair tests f(A) <= f(B) on random
/// dominated pairs (both smooth A <= B = A^{1/2}(I+D)A^{1/2} pairs and
/// low-rank PSD bumps B = A + V). First violation wins, lowest trial index.
MonotonicityVerdict numeric_operator_monotone(const ScalarFunction& f, const MonotoneConfig& cfg,
                                              ExecMode mode = ExecMode::Parallel);

/// Samples random PD pairs (X, Y) and checks the characterization hypothesis
/// f(X nabla Y) <= f(X # Y + majorant); also runs numeric_operator_monotone
/// and reports whether the verdicts agree (they do exactly when the
/// characterization theorem predicts).
MonotonicityVerdict characterize_via_hypothesis(const ScalarFunction& f,
                                                const MonotoneConfig& cfg,
                                                ExecMode mode = ExecMode::Parallel);

/// Search record for violations of A nabla B - A sigma B <= |A-B|/2 when
/// AB + BA >= 0 fails.
struct HokSearchResult {
  bool found = false;
  double best_min_eig = 0.0;  // most negative residual eigenvalue seen
  double theta = 0.0;
  double epsilon = 0.0;
  HermitianMatrix a;
  HermitianMatrix b;
  double condition_min_eig = 0.0;
  std::size_t trials_run = 0;
};

/// Scans epsilon-regularized projection pairs (P + eps I, Q(theta) + eps I)
/// over grids of theta in (0, pi/4] and eps in [1e-6, 1e-2], plus random PSD
/// pairs with indefinite AB + BA. "Not found within budget" is a valid
/// outcome (e.g. for the arithmetic mean no violation exists).
HokSearchResult counterexample_search_hok(const MeanRepresentation& rep,
                                          const MonotoneConfig& cfg,
                                          ExecMode mode = ExecMode::Parallel);

}  // namespace lomean
