#include "lomean/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lomean/generators.hpp"
#include "lomean/spectral.hpp"

namespace lomean {

namespace {

InequalityReport make_report(const HermitianMatrix& residual, double tol, std::string digest) {
  InequalityReport r;
  r.residual = residual;
  r.min_residual_eig = min_eigenvalue(residual);
  r.tol_used = tol;
  r.holds = r.min_residual_eig >= -tol;
  r.inputs_digest = std::move(digest);
  return r;
}

}  // namespace

HermitianMatrix reverse_cauchy_majorant(const HermitianMatrix& a, const HermitianMatrix& b,
                                        const TolerancePolicy& pol) {
  require_same_dim(a, b, "reverse_cauchy_majorant");
  const HermitianMatrix ai = pd_inv_sqrt(a, pol.rel * 1e-3);
  const HermitianMatrix as = psd_sqrt(a);
  const HermitianMatrix inner =
      HermitianMatrix::identity(a.dim()) - symmetrize(ai.mat() * (b.mat() * ai.mat()));
  const HermitianMatrix abs_inner = matrix_abs(inner);
  return 0.5 * symmetrize(as.mat() * (abs_inner.mat() * as.mat()));
}

HermitianMatrix sharp_plus_majorant(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const TolerancePolicy& pol) {
  return geometric_mean(a, b, pol) + reverse_cauchy_majorant(a, b, pol);
}

InequalityReport reverse_cauchy_residual(const ScalarFunction& f, const HermitianMatrix& a,
                                         const HermitianMatrix& b, const TolerancePolicy& pol) {
  require_same_dim(a, b, "reverse_cauchy_residual");
  const HermitianMatrix lhs = arithmetic_mean(a, b) - f_mean(f, a, b, pol);
  const HermitianMatrix rhs = reverse_cauchy_majorant(a, b, pol);
  const double tol = pol.effective({spectral_norm(a), spectral_norm(b)});
  std::ostringstream digest;
  digest << "reverse_cauchy;f=" << f.label << ";dim=" << a.dim();
  return make_report(rhs - lhs, tol, digest.str());
}

InequalityReport characterization_hypothesis_check(const ScalarFunction& f,
                                                   const HermitianMatrix& x,
                                                   const HermitianMatrix& y,
                                                   const TolerancePolicy& pol) {
  require_same_dim(x, y, "characterization_hypothesis_check");
  const HermitianMatrix lhs_arg = arithmetic_mean(x, y);
  const HermitianMatrix rhs_arg = sharp_plus_majorant(x, y, pol);

  // f must be nonnegative on the spectra it sees; a sign change is a
  // precondition failure, not a monotonicity verdict.
  for (const HermitianMatrix* m : {&lhs_arg, &rhs_arg}) {
    for (double lam : spectral_decompose(*m).eigenvalues) {
      const double v = f(std::max(lam, 0.0));
      if (v < -1e-12) {
        std::ostringstream os;
        os << "characterization_hypothesis_check: f('" << f.label << "')(" << lam << ") = " << v
           << " is negative";
        throw PreconditionError(os.str());
      }
    }
  }

  const double clamp = pol.effective({spectral_norm(lhs_arg), spectral_norm(rhs_arg)});
  const HermitianMatrix lhs = apply_spectral(f.eval, lhs_arg, 0.0, clamp);
  const HermitianMatrix rhs = apply_spectral(f.eval, rhs_arg, 0.0, clamp);
  const double tol = pol.effective({spectral_norm(lhs), spectral_norm(rhs)});
  std::ostringstream digest;
  digest << "characterization;f=" << f.label << ";dim=" << x.dim();
  return make_report(rhs - lhs, tol, digest.str());
}

InequalityReport hiai_ando_check(const ScalarFunction& f, const HermitianMatrix& a,
                                 const HermitianMatrix& b, const TolerancePolicy& pol) {
  require_same_dim(a, b, "hiai_ando_check");
  const HermitianMatrix nabla = arithmetic_mean(a, b);
  const HermitianMatrix sharp = geometric_mean(a, b, pol);
  const double clamp = pol.effective({spectral_norm(nabla), spectral_norm(sharp)});
  const HermitianMatrix lhs = apply_spectral(f.eval, sharp, 0.0, clamp);
  const HermitianMatrix rhs = apply_spectral(f.eval, nabla, 0.0, clamp);
  const double tol = pol.effective({spectral_norm(lhs), spectral_norm(rhs)});
  std::ostringstream digest;
  digest << "hiai_ando;f=" << f.label << ";dim=" << a.dim();
  return make_report(rhs - lhs, tol, digest.str());
}

HokReport hok_check(const MeanRepresentation& rep, const HermitianMatrix& a,
                    const HermitianMatrix& b, const TolerancePolicy& pol) {
  require_same_dim(a, b, "hok_check");
  HokReport out;

  const HermitianMatrix anticommutator = symmetrize(2.0 * (a.mat() * b.mat()));
  out.condition_min_eig = min_eigenvalue(anticommutator);
  out.condition_holds =
      out.condition_min_eig >= -pol.effective(spectral_norm(anticommutator));

  const HermitianMatrix lhs = arithmetic_mean(a, b) - apply_mean(rep, a, b, pol);
  const HermitianMatrix rhs = 0.5 * matrix_abs(a - b);
  const double tol = pol.effective({spectral_norm(a), spectral_norm(b)});
  std::ostringstream digest;
  digest << "hok;mean=" << rep.label() << ";dim=" << a.dim();
  out.ineq = make_report(rhs - lhs, tol, digest.str());
  return out;
}

ObstructionRecord projection_obstruction(double alpha, double theta, const TolerancePolicy& pol) {
  if (alpha < 0.0 || alpha > 1.0) throw DomainError("projection_obstruction: alpha outside [0,1]");
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (theta < 0.0 || theta > half_pi)
    throw DomainError("projection_obstruction: theta outside [0, pi/2]");

  ObstructionRecord rec;
  rec.alpha = alpha;
  rec.theta = theta;
  rec.degenerate = theta < 1e-12 || theta > half_pi - 1e-12;

  const auto [p, q] = gen_projection_pair(theta);
  const HermitianMatrix lhs = (1.0 - alpha) * (p + q);
  const HermitianMatrix rhs = matrix_abs(p - q);
  const HermitianMatrix residual = rhs - lhs;

  rec.tol_used = pol.effective(1.0 + std::abs(std::cos(theta)));
  rec.min_residual_eig = min_eigenvalue(residual);
  rec.holds = rec.min_residual_eig >= -rec.tol_used;
  const double c = std::cos(theta);
  rec.lhs_entry11 = (1.0 - alpha) * (1.0 + c * c);
  rec.rhs_entry11 = rhs(0, 0).real();
  rec.rhs_entry11_printed = std::sin(theta) * std::sin(theta);
  rec.entry_bound_fails = rec.lhs_entry11 > rec.rhs_entry11 + rec.tol_used;
  return rec;
}

double obstruction_threshold(double alpha, double tol_theta, const TolerancePolicy& pol) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (alpha >= 1.0) return 0.0;
  double lo = 1e-9;
  double hi = half_pi;
  if (projection_obstruction(alpha, lo, pol).holds) return lo;
  while (hi - lo > tol_theta) {
    const double mid = 0.5 * (lo + hi);
    if (projection_obstruction(alpha, mid, pol).holds)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

bool scalar_min_bound(const ScalarFunction& f, double t, double tol) {
  if (t < 0.0) throw DomainError("scalar_min_bound: t must be >= 0");
  return std::min(1.0, t) <= f(t) + tol;
}

}  // namespace lomean
