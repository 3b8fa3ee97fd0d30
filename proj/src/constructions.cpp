#include "lomean/constructions.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "lomean/inequalities.hpp"
#include "lomean/means.hpp"
#include "lomean/spectral.hpp"

namespace lomean {

namespace {

constexpr double kBoundaryClamp = 1e-10;
constexpr double kFloorEps = 1e-10;

long double h_ld(long double t) { return sqrtl(t * (2.0L - t)) + 1.0L - t; }

long double h_prime_ld(long double t) {
  const long double g = sqrtl(t * (2.0L - t));
  if (g <= 0.0L) return 1e30L;  // derivative blows up at t = 0
  return (1.0L - t) / g - 1.0L;
}

long double domain_top_ld() { return (2.0L - sqrtl(2.0L)) / 2.0L; }

}  // namespace

double h_domain_top() { return static_cast<double>(domain_top_ld()); }

double h_eval(double t) {
  const double top = h_domain_top();
  if (t < 0.0 || t > top) {
    if (t >= -kBoundaryClamp && t <= top + kBoundaryClamp) {
      t = std::min(std::max(t, 0.0), top);
    } else {
      std::ostringstream os;
      os << "h_eval: t = " << t << " outside [0, " << top << "]";
      throw DomainError(os.str());
    }
  }
  return static_cast<double>(h_ld(static_cast<long double>(t)));
}

double h_inverse(double s) {
  const long double sqrt2 = sqrtl(2.0L);
  if (s < 1.0 - kBoundaryClamp || s > static_cast<double>(sqrt2) + kBoundaryClamp) {
    std::ostringstream os;
    os << "h_inverse: s = " << s << " outside [1, sqrt(2)]";
    throw DomainError(os.str());
  }
  long double target = static_cast<long double>(s);
  const long double top = domain_top_ld();
  if (target <= 1.0L) return 0.0;
  if (target >= h_ld(top)) return static_cast<double>(top);

  // Safeguarded Newton inside a maintained bracket, bisection fallback.
  long double lo = 0.0L, hi = top;
  long double t = 0.5L * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const long double g = h_ld(t) - target;
    if (g == 0.0L) break;
    if (g > 0.0L)
      hi = t;
    else
      lo = t;
    if (hi - lo <= 1e-16L) {
      t = 0.5L * (lo + hi);
      break;
    }
    const long double dp = h_prime_ld(t);
    long double next = t - g / dp;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    if (fabsl(next - t) <= 1e-19L) {
      t = next;
      break;
    }
    t = next;
  }
  if (t < lo) t = lo;
  if (t > hi) t = hi;
  return static_cast<double>(t);
}

std::pair<double, double> scalar_decompose(double a, double b) {
  if (!(a > 0.0)) throw DomainError("scalar_decompose: a must be > 0");
  const double tol = std::max(1e-12, 1e-9 * a);
  const double top = std::sqrt(2.0) * a;
  if (b < a - tol || b > top + tol) {
    std::ostringstream os;
    os << "scalar_decompose: b = " << b << " outside [a, sqrt(2) a] = [" << a << ", " << top
       << "]";
    throw DomainError(os.str());
  }
  const long double al = a, bl = std::min(std::max(static_cast<long double>(b),
                                                   static_cast<long double>(a)),
                                          sqrtl(2.0L) * al);
  const long double disc = (sqrtl(2.0L) * al - bl) * (sqrtl(2.0L) * al + bl);
  const long double denom = (2.0L * al - bl) + sqrtl(std::max(disc, 0.0L));
  const long double x = (bl - al) * (bl - al) / denom;
  return {static_cast<double>(x), static_cast<double>(2.0L * al - x)};
}

int ceil_with_slack(double x) { return static_cast<int>(std::ceil(x - 1e-12)); }

std::vector<double> scalar_chain(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("scalar_chain: endpoints must be > 0");
  if (b < a) throw DomainError("scalar_chain: need a <= b");
  if (b == a) return {a};
  const double steps_exact = std::log(b / a) / std::log(std::sqrt(2.0));
  const int m = std::max(1, ceil_with_slack(steps_exact));
  std::vector<double> chain(static_cast<size_t>(m) + 1);
  chain.front() = a;
  chain.back() = b;
  const double log_ratio = std::log(b / a);
  for (int i = 1; i < m; ++i)
    chain[static_cast<size_t>(i)] = a * std::exp(log_ratio * i / m);
  return chain;
}

namespace {

DecompositionResult lemma1_core(const HermitianMatrix& a, const TolerancePolicy& pol,
                                const HermitianMatrix& target2) {
  const auto sd = spectral_decompose(a);
  const double sqrt2 = std::sqrt(2.0);
  const double tol = pol.effective(spectral_norm(a));
  if (sd.eigenvalues.front() < 1.0 - tol || sd.eigenvalues.back() > sqrt2 + tol) {
    std::ostringstream os;
    os << "lemma1_decompose: spectrum [" << sd.eigenvalues.front() << ", "
       << sd.eigenvalues.back() << "] outside [1, sqrt(2)] beyond tolerance " << tol;
    throw DomainError(os.str());
  }

  DecompositionResult out;
  double floor_shift = 0.0;
  out.x = sd.assemble([&](double lam) {
    const double clamped = std::min(std::max(lam, 1.0), sqrt2);
    const double raw = h_inverse(clamped);
    if (raw < kFloorEps) {
      floor_shift = std::max(floor_shift, kFloorEps - raw);
      return kFloorEps;
    }
    return raw;
  });
  out.floor_shift = floor_shift;
  out.y = 2.0 * HermitianMatrix::identity(a.dim()) - out.x;

  const HermitianMatrix mean = arithmetic_mean(out.x, out.y);
  out.mean_residual = spectral_norm(mean - HermitianMatrix::identity(a.dim()));

  const HermitianMatrix recon = sharp_plus_majorant(out.x, out.y, pol);
  out.reconstruction_residual =
      spectral_norm(recon - target2) / std::max(spectral_norm(target2), 1e-300);
  return out;
}

}  // namespace

DecompositionResult lemma1_decompose(const HermitianMatrix& a, const TolerancePolicy& pol) {
  return lemma1_core(a, pol, a);
}

DecompositionResult lemma2_decompose(const HermitianMatrix& a, const HermitianMatrix& b,
                                     const TolerancePolicy& pol) {
  require_same_dim(a, b, "lemma2_decompose");
  const double sqrt2 = std::sqrt(2.0);
  const OrderVerdict low = loewner_compare(a, b, pol);
  if (!low.le()) {
    std::ostringstream os;
    os << "lemma2_decompose: A <= B fails, min eig(B - A) = " << low.witness_min_eig_BmA;
    throw PreconditionError(os.str());
  }
  const OrderVerdict high = loewner_compare(b, sqrt2 * a, pol);
  if (!high.le()) {
    std::ostringstream os;
    os << "lemma2_decompose: B <= sqrt(2) A fails, min eig(sqrt(2)A - B) = "
       << high.witness_min_eig_BmA;
    throw PreconditionError(os.str());
  }

  const HermitianMatrix ai = pd_inv_sqrt(a, pol.rel * 1e-3);
  const HermitianMatrix as = psd_sqrt(a);
  const HermitianMatrix m = symmetrize(ai.mat() * (b.mat() * ai.mat()));

  const DecompositionResult inner = lemma1_core(m, pol, m);

  DecompositionResult out;
  out.x = symmetrize(as.mat() * (inner.x.mat() * as.mat()));
  out.y = symmetrize(as.mat() * (inner.y.mat() * as.mat()));
  out.floor_shift = inner.floor_shift;

  const double scale_a = std::max(spectral_norm(a), 1e-300);
  out.mean_residual = spectral_norm(arithmetic_mean(out.x, out.y) - a) / scale_a;

  const HermitianMatrix recon = sharp_plus_majorant(out.x, out.y, pol);
  out.reconstruction_residual = spectral_norm(recon - b) / std::max(spectral_norm(b), 1e-300);
  return out;
}

ChainResult matrix_chain(const HermitianMatrix& a, const HermitianMatrix& b,
                         const TolerancePolicy& pol) {
  require_same_dim(a, b, "matrix_chain");
  const OrderVerdict v = loewner_compare(a, b, pol);
  if (!v.le()) {
    std::ostringstream os;
    os << "matrix_chain: A <= B fails, min eig(B - A) = " << v.witness_min_eig_BmA;
    throw PreconditionError(os.str());
  }

  ChainResult out;
  out.factor = std::sqrt(2.0);

  if (a.mat().storage() == b.mat().storage()) {  // degenerate B == A
    out.links = {a};
    out.k = 0;
    return out;
  }

  const HermitianMatrix ai = pd_inv_sqrt(a, pol.rel * 1e-3);
  const HermitianMatrix as = psd_sqrt(a);
  const HermitianMatrix c = symmetrize(ai.mat() * (b.mat() * ai.mat()));
  const auto sd = spectral_decompose(c);
  const double lmax = sd.eigenvalues.back();

  const int k = lmax <= 1.0 ? 1
                            : std::max(1, ceil_with_slack(std::log(lmax) /
                                                          std::log(std::sqrt(2.0))));
  out.k = k;
  out.links.reserve(static_cast<size_t>(k) + 1);
  out.links.push_back(a);
  for (int i = 1; i <= k; ++i) {
    const double e = static_cast<double>(i) / k;
    const HermitianMatrix z =
        sd.assemble([e](double lam) { return std::pow(std::max(lam, 0.0), e); });
    out.links.push_back(symmetrize(as.mat() * (z.mat() * as.mat())));
  }
  return out;
}

bool chain_links_valid(const ChainResult& chain, const TolerancePolicy& pol) {
  for (size_t i = 0; i + 1 < chain.links.size(); ++i) {
    const auto& lo = chain.links[i];
    const auto& hi = chain.links[i + 1];
    if (!loewner_compare(lo, hi, pol).le()) return false;
    if (!loewner_compare(hi, chain.factor * lo, pol).le()) return false;
  }
  return true;
}

}  // namespace lomean
