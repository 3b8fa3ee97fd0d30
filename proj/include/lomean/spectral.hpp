#pragma once

#include <functional>
#include <vector>

#include "lomean/matrix.hpp"

namespace lomean {

/// Eigendecomposition A = U diag(eigenvalues) U* with eigenvalues ascending and
/// U unitary (columns are orthonormal eigenvectors).
struct SpectralData {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  /// U diag(f(lambda_i)) U* for a per-eigenvalue map; result symmetrized.
  HermitianMatrix assemble(const std::function<double(double)>& f) const;
};

/// Cyclic Jacobi diagonalization for complex Hermitian matrices. Throws
/// NumericError with norm diagnostics if the off-diagonal mass does not
/// converge (does not happen for finite input).
SpectralData spectral_decompose(const HermitianMatrix& a);

/// Largest |eigenvalue|, i.e. the spectral norm of a Hermitian matrix.
double spectral_norm(const HermitianMatrix& a);

double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);

/// Entrywise-on-the-spectrum application of f through the eigendecomposition.
/// Eigenvalues below domain_min by at most clamp_tol are clamped to domain_min;
/// below that the call throws DomainError naming the offending eigenvalue.
HermitianMatrix apply_spectral(const std::function<double(double)>& f, const HermitianMatrix& a,
                               double domain_min, double clamp_tol);

/// apply_spectral with an unrestricted domain.
HermitianMatrix apply_spectral(const std::function<double(double)>& f, const HermitianMatrix& a);

/// PSD square root. Eigenvalues in [-tol, 0) are clamped to 0; an eigenvalue
/// below -tol raises DomainError. tol defaults to a relative scale of the input.
HermitianMatrix psd_sqrt(const HermitianMatrix& a, double tol = -1.0);

/// |M| = (M*M)^{1/2} = U diag(|lambda_i|) U*.
HermitianMatrix matrix_abs(const HermitianMatrix& m);

/// Inverse of a Hermitian positive definite matrix through the spectrum.
/// Throws SingularError when min eigenvalue <= tol (relative to the max).
HermitianMatrix pd_inverse(const HermitianMatrix& a, double rel_tol = 1e-13);

/// A^{-1/2} for positive definite A.
HermitianMatrix pd_inv_sqrt(const HermitianMatrix& a, double rel_tol = 1e-13);

/// Spectral Moore-Penrose pseudo-inverse: eigenvalues within cutoff of zero are
/// treated as exactly zero. cutoff < 0 selects dim * eps * max|lambda|.
HermitianMatrix spectral_pinv(const HermitianMatrix& a, double cutoff = -1.0);

}  // namespace lomean
