#pragma once

#include <utility>
#include <vector>

#include "lomean/matrix.hpp"
#include "lomean/order.hpp"

namespace lomean {

/// Domain of h: [0, (2 - sqrt 2)/2], where h(t) = sqrt(2t - t^2) + 1 - t is
/// strictly increasing with range [1, sqrt 2].
double h_domain_top();

/// h(t) = sqrt(2t - t^2) + 1 - t. Inputs within 1e-10 of the domain are
/// clamped; beyond that DomainError.
double h_eval(double t);

/// Inverse of h on [1, sqrt 2], computed by safeguarded bracketed
/// Newton/bisection on the closed interval to 1e-14. Inputs within 1e-10 of
/// the range boundary are clamped onto it.
double h_inverse(double s);

/// For 0 < a <= b <= sqrt(2) a: the pair (x, y) with x <= a <= y, x + y = 2a
/// and sqrt(xy) + (y - x)/2 = b. x is the smaller root of
/// 2x^2 + 2(b - 2a)x + (b - a)^2 = 0, evaluated in the cancellation-free form
/// x = (b - a)^2 / ((2a - b) + sqrt(2a^2 - b^2)). At b = a this degenerates to
/// (0, 2a), consistent with h_inverse(1) = 0.
std::pair<double, double> scalar_decompose(double a, double b);

/// Geometric ladder a = a_0 <= ... <= a_m = b with every ratio <= sqrt 2.
/// m = max(1, ceil(ln(b/a)/ln sqrt 2)) except for the degenerate b == a case,
/// which yields the single-element chain {a}. Endpoints are exact.
std::vector<double> scalar_chain(double a, double b);

/// Output of the Lemma 1/2 constructions. Residuals are relative spectral
/// norms against the construction's two targets (the mean identity and the
/// sharp-plus-majorant reconstruction).
struct DecompositionResult {
  HermitianMatrix x;
  HermitianMatrix y;
  double mean_residual = 0.0;
  double reconstruction_residual = 0.0;
  /// Largest eigenvalue shift introduced by flooring X's spectrum at 1e-10
  /// (the constructions need X^{-1/2}; at the boundary of the sqrt(2) window
  /// the exact X is singular). 0 when untouched.
  double floor_shift = 0.0;
};

/// For I <= A <= sqrt(2) I: X = h^{-1}(A) (spectrally, eigenvalues floored at
/// 1e-10), Y = 2I - X; then X nabla Y = I and
/// X # Y + 1/2 X^{1/2}|I - X^{-1/2} Y X^{-1/2}|X^{1/2} reconstructs A.
DecompositionResult lemma1_decompose(const HermitianMatrix& a, const TolerancePolicy& pol = {});

/// For A <= B <= sqrt(2) A with A PD: congruence-lifts lemma1 applied to
/// A^{-1/2} B A^{-1/2}, giving X nabla Y = A and the reconstruction = B.
DecompositionResult lemma2_decompose(const HermitianMatrix& a, const HermitianMatrix& b,
                                     const TolerancePolicy& pol = {});

/// Chain A = A_0 <= A_1 <= ... <= A_k = B with A_i <= A_{i+1} <= sqrt(2) A_i.
struct ChainResult {
  std::vector<HermitianMatrix> links;
  double factor = 0.0;  // sqrt 2
  int k = 0;            // number of steps; links.size() == k + 1 except the
                        // degenerate B == A case, where links == {A} and k == 0
};

/// Builds the chain through commuting spectral powers of C = A^{-1/2} B A^{-1/2}:
/// Z_i = C^{i/k}, link_i = A^{1/2} Z_i A^{1/2}, k = max(1, ceil(ln lmax(C)/ln sqrt 2)).
/// Commuting powers turn the sqrt(2)-step requirement into the scalar condition
/// lmax(C)^{1/k} <= sqrt 2, which the choice of k guarantees.
ChainResult matrix_chain(const HermitianMatrix& a, const HermitianMatrix& b,
                         const TolerancePolicy& pol = {});

/// Consecutive-link check: A_i <= A_{i+1} <= factor * A_i for every step.
bool chain_links_valid(const ChainResult& chain, const TolerancePolicy& pol = {});

/// ceil with a 1e-12 slack absorbing floating jitter just above an integer.
int ceil_with_slack(double x);

}  // namespace lomean
