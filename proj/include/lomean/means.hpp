#pragma once

#include <string>
#include <vector>

#include "lomean/matrix.hpp"
#include "lomean/order.hpp"
#include "lomean/scalar_function.hpp"

namespace lomean {

/// One atom of a discrete symmetric-mean representation.
struct MeanAtom {
  double lambda = 1.0;  // > 0
  double weight = 1.0;  // > 0
};

/// Tagged description of a binary matrix mean.
struct MeanRepresentation {
  enum class Kind { Arithmetic, Geometric, Harmonic, FInduced, Discrete };
  Kind kind = Kind::Arithmetic;
  ScalarFunction f;             // FInduced only
  double alpha = 1.0;           // Discrete only, in [0, 1]
  std::vector<MeanAtom> atoms;  // Discrete only

  static MeanRepresentation arithmetic() { return {Kind::Arithmetic, {}, 1.0, {}}; }
  static MeanRepresentation geometric() { return {Kind::Geometric, {}, 1.0, {}}; }
  static MeanRepresentation harmonic() { return {Kind::Harmonic, {}, 1.0, {}}; }
  static MeanRepresentation f_induced(ScalarFunction fn) {
    return {Kind::FInduced, std::move(fn), 1.0, {}};
  }
  static MeanRepresentation discrete(double alpha, std::vector<MeanAtom> atoms) {
    return {Kind::Discrete, {}, alpha, std::move(atoms)};
  }

  /// Discrete representations must satisfy alpha + sum(w_i) = 1 within 1e-12.
  void require_normalized() const;

  std::string label() const;
};

/// (A + B)/2.
HermitianMatrix arithmetic_mean(const HermitianMatrix& a, const HermitianMatrix& b);

/// A # B = A^{1/2}(A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}; A must be PD, B PSD.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                               const TolerancePolicy& pol = {});

/// A ! B = 2(A^{-1} + B^{-1})^{-1}; both PD.
HermitianMatrix harmonic_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                              const TolerancePolicy& pol = {});

/// A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2} for normalized f.
HermitianMatrix f_mean(const ScalarFunction& f, const HermitianMatrix& a,
                       const HermitianMatrix& b, const TolerancePolicy& pol = {});

/// Parallel sum A : B. Equals (A^{-1}+B^{-1})^{-1} on PD pairs; on PSD pairs
/// it is computed as A (A+B)^+ B with the spectral pseudo-inverse, which is
/// deterministic and reproduces the projection identity
/// (lambda P):Q = lambda/(lambda+1) (P ^ Q) without limit extrapolation.
HermitianMatrix parallel_sum(const HermitianMatrix& a, const HermitianMatrix& b,
                             const TolerancePolicy& pol = {});

/// Orthogonal projection onto range(P) intersect range(Q): the spectral
/// projection of P + Q onto its eigenvalue-2 eigenspace. Inputs must be
/// idempotent Hermitian within tolerance.
HermitianMatrix projection_meet(const HermitianMatrix& p, const HermitianMatrix& q,
                                const TolerancePolicy& pol = {});

/// Discrete symmetric mean
///   (alpha/2)(A+B) + sum_i w_i (lambda_i+1)/(2 lambda_i) [(lambda_i A):B + A:(lambda_i B)].
/// The 1/(2) in the atom coefficient normalizes the representation so that
/// I sigma I = I (the printed coefficient (lambda+1)/lambda would give (2-alpha)I).
HermitianMatrix discrete_symmetric_mean(const MeanRepresentation& rep, const HermitianMatrix& a,
                                        const HermitianMatrix& b,
                                        const TolerancePolicy& pol = {});

/// Dispatch over the representation kinds.
HermitianMatrix apply_mean(const MeanRepresentation& rep, const HermitianMatrix& a,
                           const HermitianMatrix& b, const TolerancePolicy& pol = {});

}  // namespace lomean
