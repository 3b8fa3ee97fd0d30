#include "lomean/generators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lomean/spectral.hpp"

namespace lomean {

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal() {
  // Box-Muller; discard the second value to keep the stream position simple.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next_u64() % span);
}

Matrix random_invertible(int dim, Rng& rng) {
  Matrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
  return g;
}

Matrix random_unitary(int dim, Rng& rng) {
  Matrix q = random_invertible(dim, rng);
  // modified Gram-Schmidt, two passes
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < dim; ++i) q(i, j) -= proj * q(i, k);
      }
      double nrm = 0.0;
      for (int i = 0; i < dim; ++i) nrm += std::norm(q(i, j));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-12) {  // essentially impossible for Ginibre input
        q(j, j) += 1.0;
        nrm = 1.0;
      }
      for (int i = 0; i < dim; ++i) q(i, j) /= nrm;
    }
  }
  return q;
}

namespace {

Matrix random_orthogonal_real(int dim, Rng& rng) {
  Matrix q(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) q(i, j) = rng.normal();
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < dim; ++i) q(i, j) -= proj * q(i, k);
      }
      double nrm = 0.0;
      for (int i = 0; i < dim; ++i) nrm += std::norm(q(i, j));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-12) {
        q(j, j) += 1.0;
        nrm = 1.0;
      }
      for (int i = 0; i < dim; ++i) q(i, j) /= nrm;
    }
  }
  return q;
}

HermitianMatrix from_spectrum(const std::vector<double>& lam, Rng& rng, bool real_only) {
  const int n = static_cast<int>(lam.size());
  const Matrix u = real_only ? random_orthogonal_real(n, rng) : random_unitary(n, rng);
  Matrix m(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const cplx uik = lam[static_cast<size_t>(k)] * u(i, k);
      for (int j = 0; j < n; ++j) m(i, j) += uik * std::conj(u(j, k));
    }
  return symmetrize(m);
}

}  // namespace

HermitianMatrix hermitian_from_spectrum(const std::vector<double>& eigenvalues, Rng& rng,
                                        bool real_only) {
  if (eigenvalues.empty()) throw DimensionError("hermitian_from_spectrum: empty spectrum");
  return from_spectrum(eigenvalues, rng, real_only);
}

HermitianMatrix random_psd_with_spectrum(int dim, double lo, double hi, Rng& rng,
                                         bool real_only) {
  if (dim < 1) throw DimensionError("random_psd_with_spectrum: dim must be >= 1");
  if (lo < 0.0 || hi < lo) throw DomainError("random_psd_with_spectrum: need 0 <= lo <= hi");
  std::vector<double> lam(static_cast<size_t>(dim));
  for (auto& v : lam) v = rng.uniform(lo, hi);
  return from_spectrum(lam, rng, real_only);
}

HermitianMatrix gen_pd(int dim, std::uint64_t seed, double cond_target, bool real_only) {
  if (dim < 1) throw DimensionError("gen_pd: dim must be >= 1");
  if (cond_target < 1.0) throw DomainError("gen_pd: cond_target must be >= 1");
  Rng rng(derive_seed(seed, 0x9d));
  const double top = std::sqrt(cond_target);
  std::vector<double> lam(static_cast<size_t>(dim));
  if (dim == 1) {
    lam[0] = 1.0;
  } else {
    lam[0] = 1.0 / top;
    lam[static_cast<size_t>(dim) - 1] = top;
    for (int i = 1; i < dim - 1; ++i) lam[static_cast<size_t>(i)] = rng.log_uniform(1.0 / top, top);
  }
  return from_spectrum(lam, rng, real_only);
}

std::pair<HermitianMatrix, HermitianMatrix> gen_dominated_pair(int dim, std::uint64_t seed,
                                                               double factor,
                                                               double cond_target) {
  if (factor <= 1.0) throw DomainError("gen_dominated_pair: factor must be > 1");
  const HermitianMatrix a = gen_pd(dim, derive_seed(seed, 1), cond_target);
  Rng rng(derive_seed(seed, 2));
  const double span = factor - 1.0;
  const HermitianMatrix d =
      random_psd_with_spectrum(dim, 1e-2 * span, (1.0 - 1e-2) * span, rng);
  const HermitianMatrix rt = psd_sqrt(a);
  const HermitianMatrix b =
      symmetrize(rt.mat() * ((HermitianMatrix::identity(dim) + d).mat() * rt.mat()));
  return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> gen_projection_pair(double theta) {
  if (theta < 0.0 || theta > std::numbers::pi / 2.0 + 1e-12) {
    std::ostringstream os;
    os << "gen_projection_pair: theta " << theta << " outside [0, pi/2]";
    throw DomainError(os.str());
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix p(2), q(2);
  p(0, 0) = 1.0;
  q(0, 0) = c * c;
  q(0, 1) = c * s;
  q(1, 0) = c * s;
  q(1, 1) = s * s;
  return {symmetrize(p), symmetrize(q)};
}

}  // namespace lomean
