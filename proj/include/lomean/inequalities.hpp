#pragma once

#include <string>

#include "lomean/matrix.hpp"
#include "lomean/means.hpp"
#include "lomean/order.hpp"
#include "lomean/scalar_function.hpp"

namespace lomean {

/// Outcome of a one-sided Loewner inequality check. residual = RHS - LHS;
/// holds iff its minimum eigenvalue clears -tol_used.
struct InequalityReport {
  bool holds = false;
  HermitianMatrix residual;
  double min_residual_eig = 0.0;
  double tol_used = 0.0;
  std::string inputs_digest;
};

/// 1/2 A^{1/2} |I - A^{-1/2} B A^{-1/2}| A^{1/2}: the majorant of A nabla B - A sigma B.
HermitianMatrix reverse_cauchy_majorant(const HermitianMatrix& a, const HermitianMatrix& b,
                                        const TolerancePolicy& pol = {});

/// A # B + reverse_cauchy_majorant(A, B): the right-hand matrix of the
/// characterization hypothesis.
HermitianMatrix sharp_plus_majorant(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const TolerancePolicy& pol = {});

/// A nabla B - A sigma_f B <= reverse_cauchy_majorant(A, B). Holds for every
/// operator monotone normalized f.
InequalityReport reverse_cauchy_residual(const ScalarFunction& f, const HermitianMatrix& a,
                                         const HermitianMatrix& b,
                                         const TolerancePolicy& pol = {});

/// f(X nabla Y) <= f(X # Y + majorant): the hypothesis whose universal validity
/// forces operator monotonicity of f. f must be nonnegative on the spectra it
/// is applied to.
InequalityReport characterization_hypothesis_check(const ScalarFunction& f,
                                                   const HermitianMatrix& x,
                                                   const HermitianMatrix& y,
                                                   const TolerancePolicy& pol = {});

/// f(A nabla B) >= f(A # B).
InequalityReport hiai_ando_check(const ScalarFunction& f, const HermitianMatrix& a,
                                 const HermitianMatrix& b, const TolerancePolicy& pol = {});

/// hok_check result: the inequality report plus the AB + BA >= 0 condition.
struct HokReport {
  InequalityReport ineq;
  bool condition_holds = false;
  double condition_min_eig = 0.0;
};

/// A nabla B - A sigma B <= |A - B|/2, evaluated together with the condition
/// AB + BA >= 0 (symmetrized before the PSD test to kill roundoff asymmetry).
HokReport hok_check(const MeanRepresentation& rep, const HermitianMatrix& a,
                    const HermitianMatrix& b, const TolerancePolicy& pol = {});

/// Both sides of (1-alpha)(P+Q) <= |P-Q| for the projection family, with the
/// (1,1)-entry bookkeeping. rhs_entry11 is the numerically computed value
/// (sin theta); rhs_entry11_printed records sin^2 theta for comparison, since
/// the two disagree while leading to the same alpha >= 1 conclusion.
struct ObstructionRecord {
  double alpha = 0.0;
  double theta = 0.0;
  bool holds = false;
  double min_residual_eig = 0.0;
  double tol_used = 0.0;
  double lhs_entry11 = 0.0;
  double rhs_entry11 = 0.0;
  double rhs_entry11_printed = 0.0;
  bool entry_bound_fails = false;
  bool degenerate = false;
};

ObstructionRecord projection_obstruction(double alpha, double theta,
                                         const TolerancePolicy& pol = {});

/// Smallest theta (bisection to tol_theta) at which the matrix inequality of
/// projection_obstruction holds; every theta below it fails. Returns 0 for
/// alpha = 1 (the inequality always holds there).
double obstruction_threshold(double alpha, double tol_theta = 1e-9,
                             const TolerancePolicy& pol = {});

/// min(1, t) <= f(t) + tol for normalized f.
bool scalar_min_bound(const ScalarFunction& f, double t, double tol = 1e-12);

}  // namespace lomean
