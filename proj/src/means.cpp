#include "lomean/means.hpp"

#include <cmath>
#include <sstream>

#include "lomean/spectral.hpp"

namespace lomean {

void MeanRepresentation::require_normalized() const {
  if (kind != Kind::Discrete) return;
  if (alpha < -1e-12 || alpha > 1.0 + 1e-12)
    throw DomainError("MeanRepresentation: alpha outside [0, 1]");
  double total = alpha;
  for (const auto& atom : atoms) {
    if (atom.lambda <= 0.0 || atom.weight <= 0.0)
      throw DomainError("MeanRepresentation: atoms need lambda > 0 and w > 0");
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "MeanRepresentation: alpha + sum(w) = " << total << ", expected 1";
    throw DomainError(os.str());
  }
}

std::string MeanRepresentation::label() const {
  switch (kind) {
    case Kind::Arithmetic: return "arithmetic";
    case Kind::Geometric: return "geometric";
    case Kind::Harmonic: return "harmonic";
    case Kind::FInduced: return "f_induced(" + f.label + ")";
    case Kind::Discrete: {
      std::ostringstream os;
      os << "discrete(alpha=" << alpha << ", atoms=" << atoms.size() << ")";
      return os.str();
    }
  }
  return "?";
}

HermitianMatrix arithmetic_mean(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b, "arithmetic_mean");
  return 0.5 * (a + b);
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                               const TolerancePolicy& pol) {
  require_same_dim(a, b, "geometric_mean");
  const HermitianMatrix ai = pd_inv_sqrt(a, pol.rel * 1e-3);
  const HermitianMatrix as = psd_sqrt(a);
  const HermitianMatrix inner = symmetrize(ai.mat() * (b.mat() * ai.mat()));
  const HermitianMatrix root = psd_sqrt(inner, pol.effective(spectral_norm(inner)));
  return symmetrize(as.mat() * (root.mat() * as.mat()));
}

HermitianMatrix harmonic_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                              const TolerancePolicy& pol) {
  require_same_dim(a, b, "harmonic_mean");
  (void)pol;
  return 2.0 * pd_inverse(pd_inverse(a) + pd_inverse(b));
}

HermitianMatrix f_mean(const ScalarFunction& f, const HermitianMatrix& a,
                       const HermitianMatrix& b, const TolerancePolicy& pol) {
  require_same_dim(a, b, "f_mean");
  f.require_normalized();
  f.require_nonnegative_on_grid();
  const HermitianMatrix ai = pd_inv_sqrt(a, pol.rel * 1e-3);
  const HermitianMatrix as = psd_sqrt(a);
  const HermitianMatrix inner = symmetrize(ai.mat() * (b.mat() * ai.mat()));
  const HermitianMatrix mapped =
      apply_spectral(f.eval, inner, 0.0, pol.effective(spectral_norm(inner)));
  return symmetrize(as.mat() * (mapped.mat() * as.mat()));
}

HermitianMatrix parallel_sum(const HermitianMatrix& a, const HermitianMatrix& b,
                             const TolerancePolicy& pol) {
  require_same_dim(a, b, "parallel_sum");
  const HermitianMatrix sum = a + b;
  const double cutoff = pol.effective(spectral_norm(sum));
  const HermitianMatrix pinv = spectral_pinv(sum, cutoff);
  return symmetrize(a.mat() * (pinv.mat() * b.mat()));
}

HermitianMatrix projection_meet(const HermitianMatrix& p, const HermitianMatrix& q,
                                const TolerancePolicy& pol) {
  require_same_dim(p, q, "projection_meet");
  const double tol_p = pol.effective(std::max(spectral_norm(p), 1.0));
  for (const HermitianMatrix* m : {&p, &q}) {
    const double err = spectral_norm(symmetrize(m->mat() * m->mat()) - *m);
    if (err > 100 * tol_p) {
      std::ostringstream os;
      os << "projection_meet: input is not idempotent, ||M^2 - M|| = " << err;
      throw DomainError(os.str());
    }
  }
  const auto sd = spectral_decompose(p + q);
  const int n = p.dim();
  Matrix meet(n);
  const double tol = pol.effective(2.0);
  for (int k = 0; k < n; ++k) {
    if (sd.eigenvalues[static_cast<size_t>(k)] < 2.0 - std::max(tol, 1e-8)) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        meet(i, j) += sd.eigenvectors(i, k) * std::conj(sd.eigenvectors(j, k));
  }
  return symmetrize(meet);
}

HermitianMatrix discrete_symmetric_mean(const MeanRepresentation& rep, const HermitianMatrix& a,
                                        const HermitianMatrix& b, const TolerancePolicy& pol) {
  if (rep.kind != MeanRepresentation::Kind::Discrete)
    throw DomainError("discrete_symmetric_mean: representation is not discrete");
  rep.require_normalized();
  require_same_dim(a, b, "discrete_symmetric_mean");

  HermitianMatrix acc = (rep.alpha / 2.0) * (a + b);
  for (const auto& atom : rep.atoms) {
    const double coeff = atom.weight * (atom.lambda + 1.0) / (2.0 * atom.lambda);
    const HermitianMatrix left = parallel_sum(atom.lambda * a, b, pol);
    const HermitianMatrix right = parallel_sum(a, atom.lambda * b, pol);
    acc = acc + coeff * (left + right);
  }
  return acc;
}

HermitianMatrix apply_mean(const MeanRepresentation& rep, const HermitianMatrix& a,
                           const HermitianMatrix& b, const TolerancePolicy& pol) {
  switch (rep.kind) {
    case MeanRepresentation::Kind::Arithmetic: return arithmetic_mean(a, b);
    case MeanRepresentation::Kind::Geometric: return geometric_mean(a, b, pol);
    case MeanRepresentation::Kind::Harmonic: return harmonic_mean(a, b, pol);
    case MeanRepresentation::Kind::FInduced: return f_mean(rep.f, a, b, pol);
    case MeanRepresentation::Kind::Discrete: return discrete_symmetric_mean(rep, a, b, pol);
  }
  throw Error("apply_mean: bad kind");
}

}  // namespace lomean
