#include "lomean/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace lomean {

namespace {

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianMatrix SpectralData::assemble(const std::function<double(double)>& f) const {
  const int n = eigenvectors.dim();
  Matrix r(n);
  for (int k = 0; k < n; ++k) {
    const double fk = f(eigenvalues[static_cast<size_t>(k)]);
    if (fk == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const cplx uik = fk * eigenvectors(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += uik * std::conj(eigenvectors(j, k));
    }
  }
  return symmetrize(r);
}

// Cyclic Jacobi with complex rotations. Each sweep visits every off-diagonal
// pivot (p,q); the 2x2 Hermitian subproblem is reduced to a real rotation by
// factoring out the phase of a_pq.
SpectralData spectral_decompose(const HermitianMatrix& input) {
  const int n = input.dim();
  Matrix a = input.mat();
  Matrix v = Matrix::identity(n);

  const double fro = frobenius_norm(a);
  const double stop = std::max(std::numeric_limits<double>::min(),
                               1e-15 * std::max(fro, 1.0) / std::max(1, n));
  const int max_sweeps = 64;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop * n) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= stop) continue;
        const cplx phase = apq / mag;  // a_pq = mag * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J: J_pp = c, J_pq = s, J_qp = -s*conj(phase), J_qq = c*conj(phase).
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + jqp * akq;
          a(k, q) = s * akp + jqq * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + jqp * vkq;
          v(k, q) = s * vkp + jqq * vkq;
        }
      }
    }
  }

  if (sweep == max_sweeps && off_diagonal_norm(a) > 1e-10 * std::max(fro, 1.0)) {
    std::ostringstream os;
    os << "spectral_decompose: Jacobi failed to converge after " << max_sweeps
       << " sweeps; dim=" << n << " fro=" << fro << " offdiag=" << off_diagonal_norm(a);
    throw NumericError(os.str());
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  SpectralData out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  out.eigenvectors = Matrix(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)],
                                                order[static_cast<size_t>(k)]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[static_cast<size_t>(k)]);
  }
  return out;
}

double spectral_norm(const HermitianMatrix& a) {
  const auto sd = spectral_decompose(a);
  return std::max(std::abs(sd.eigenvalues.front()), std::abs(sd.eigenvalues.back()));
}

double min_eigenvalue(const HermitianMatrix& a) { return spectral_decompose(a).eigenvalues.front(); }

double max_eigenvalue(const HermitianMatrix& a) { return spectral_decompose(a).eigenvalues.back(); }

HermitianMatrix apply_spectral(const std::function<double(double)>& f, const HermitianMatrix& a,
                               double domain_min, double clamp_tol) {
  auto sd = spectral_decompose(a);
  for (double& lam : sd.eigenvalues) {
    if (lam < domain_min) {
      if (lam < domain_min - clamp_tol) {
        std::ostringstream os;
        os << "apply_spectral: eigenvalue " << lam << " below domain bound " << domain_min
           << " beyond clamp tolerance " << clamp_tol;
        throw DomainError(os.str());
      }
      lam = domain_min;
    }
  }
  return sd.assemble(f);
}

HermitianMatrix apply_spectral(const std::function<double(double)>& f, const HermitianMatrix& a) {
  return spectral_decompose(a).assemble(f);
}

HermitianMatrix psd_sqrt(const HermitianMatrix& a, double tol) {
  auto sd = spectral_decompose(a);
  const double scale = std::max(std::abs(sd.eigenvalues.front()), std::abs(sd.eigenvalues.back()));
  if (tol < 0.0) tol = std::max(1e-12, 1e-12 * scale);
  if (sd.eigenvalues.front() < -tol) {
    std::ostringstream os;
    os << "psd_sqrt: input not PSD, min eigenvalue " << sd.eigenvalues.front() << " < -" << tol;
    throw DomainError(os.str());
  }
  return sd.assemble([](double t) { return std::sqrt(std::max(t, 0.0)); });
}

HermitianMatrix matrix_abs(const HermitianMatrix& m) {
  return spectral_decompose(m).assemble([](double t) { return std::abs(t); });
}

HermitianMatrix pd_inverse(const HermitianMatrix& a, double rel_tol) {
  auto sd = spectral_decompose(a);
  const double top = std::max(std::abs(sd.eigenvalues.back()), std::abs(sd.eigenvalues.front()));
  if (sd.eigenvalues.front() <= rel_tol * std::max(top, 1e-300)) {
    std::ostringstream os;
    os << "pd_inverse: matrix singular or not PD, min eigenvalue " << sd.eigenvalues.front();
    throw SingularError(os.str());
  }
  return sd.assemble([](double t) { return 1.0 / t; });
}

HermitianMatrix pd_inv_sqrt(const HermitianMatrix& a, double rel_tol) {
  auto sd = spectral_decompose(a);
  const double top = std::max(std::abs(sd.eigenvalues.back()), std::abs(sd.eigenvalues.front()));
  if (sd.eigenvalues.front() <= rel_tol * std::max(top, 1e-300)) {
    std::ostringstream os;
    os << "pd_inv_sqrt: matrix singular or not PD, min eigenvalue " << sd.eigenvalues.front();
    throw SingularError(os.str());
  }
  return sd.assemble([](double t) { return 1.0 / std::sqrt(t); });
}

HermitianMatrix spectral_pinv(const HermitianMatrix& a, double cutoff) {
  auto sd = spectral_decompose(a);
  const double top = std::max(std::abs(sd.eigenvalues.back()), std::abs(sd.eigenvalues.front()));
  if (cutoff < 0.0) cutoff = a.dim() * std::numeric_limits<double>::epsilon() * std::max(top, 1.0);
  return sd.assemble([cutoff](double t) { return std::abs(t) <= cutoff ? 0.0 : 1.0 / t; });
}

}  // namespace lomean
