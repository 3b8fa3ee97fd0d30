#pragma once

#include <initializer_list>
#include <string>

#include "lomean/matrix.hpp"

namespace lomean {

/// Scale-aware comparison tolerance. The effective tolerance for a comparison
/// involving matrices M_1..M_k is max(abs_floor, rel * max_i spectral_norm(M_i)):
/// the inequalities under test are homogeneous under simultaneous scaling, so a
/// fixed absolute cutoff would misjudge rescaled inputs.
struct TolerancePolicy {
  double rel = 1e-9;
  double abs_floor = 1e-12;

  double effective(double scale) const;
  double effective(std::initializer_list<double> scales) const;
};

enum class Relation { LE, GE, EQ, INCOMPARABLE };

std::string to_string(Relation r);

/// Outcome of a Loewner comparison of A against B, with the witnessing extreme
/// eigenvalues of the difference so borderline verdicts stay auditable.
struct OrderVerdict {
  Relation relation = Relation::INCOMPARABLE;
  double witness_min_eig_BmA = 0.0;  // min eigenvalue of B - A
  double witness_min_eig_AmB = 0.0;  // min eigenvalue of A - B
  double tol_used = 0.0;

  bool le() const { return relation == Relation::LE || relation == Relation::EQ; }
  bool ge() const { return relation == Relation::GE || relation == Relation::EQ; }
};

/// A <= B in the Loewner order iff B - A is PSD within tolerance. Antisymmetric
/// in its arguments: swapping A and B swaps LE and GE.
OrderVerdict loewner_compare(const HermitianMatrix& a, const HermitianMatrix& b,
                             const TolerancePolicy& pol = {});

/// min eigenvalue >= -tol test with the policy's scale-aware tolerance.
bool is_psd(const HermitianMatrix& a, const TolerancePolicy& pol = {});

}  // namespace lomean
