#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lomean {

/// Evaluable real function on [0, inf), the carrier for candidate operator
/// monotone functions and Kubo-Ando mean generators.
struct ScalarFunction {
  std::function<double(double)> eval;
  std::string label;
  bool claims_operator_monotone = false;

  double operator()(double t) const { return eval(t); }

  /// Mean generators must satisfy f(1) = 1; throws DomainError otherwise.
  void require_normalized(double tol = 1e-12) const;

  /// Mean generators must be nonnegative; checked on a fixed log grid over
  /// [0, 1e6]. Throws DomainError naming the offending point.
  void require_nonnegative_on_grid() const;
};

/// Built-in registry. Fixed names:
///   power:0.3, sqrt, arithmetic, harmonic, logmean, const   (operator monotone)
///   square, cube, exp                                       (non-monotone probes)
/// "power:p" is parsed for any p in [0, 1] (claims monotone) and p > 1
/// (claims non-monotone).
ScalarFunction lookup_function(const std::string& name);

/// Sampled function: linear interpolation between the nodes, constant
/// extension beyond them. Nodes must be nonnegative, strictly increasing in
/// t, at least two. The oracles then test the interpolant as given — a
/// coarse table cannot certify more than its resolution resolves.
ScalarFunction tabulated_function(std::vector<double> t, std::vector<double> f,
                                  std::string label);

/// The nine registry names above, monotone entries first.
std::vector<std::string> registry_names();

/// f(t) = (t-1)/ln t with the continuity values f(1) = 1, f(0) = 0.
double log_mean_generator(double t);

}  // namespace lomean
