#include "lomean/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lomean/generators.hpp"
#include "lomean/inequalities.hpp"
#include "lomean/rng.hpp"
#include "lomean/spectral.hpp"

namespace lomean {

namespace {

constexpr std::size_t kChunk = 256;

std::vector<double> log_uniform_spectrum(int dim, double lo, double hi, Rng& rng) {
  std::vector<double> lam(static_cast<size_t>(dim));
  for (auto& v : lam) v = rng.log_uniform(lo, hi);
  return lam;
}

}  // namespace

std::string MonotoneConfig::digest() const {
  std::ostringstream os;
  os << "t_min=" << t_min << ";t_max=" << t_max << ";n_max=" << n_max << ";dims=";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ";trials=" << trials << ";seed=" << seed;
  return os.str();
}

HermitianMatrix loewner_matrix(const ScalarFunction& f, const std::vector<double>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw DimensionError("loewner_matrix: empty point set");
  for (int i = 0; i < n; ++i) {
    if (!(points[static_cast<size_t>(i)] > 0.0))
      throw DomainError("loewner_matrix: points must be positive");
    for (int j = i + 1; j < n; ++j)
      if (std::abs(points[static_cast<size_t>(i)] - points[static_cast<size_t>(j)]) <= 1e-8)
        throw DomainError("loewner_matrix: coincident points (gap <= 1e-8)");
  }
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const double pi = points[static_cast<size_t>(i)];
    const double h = std::max(1e-6, 1e-6 * pi);
    m(i, i) = (f(pi + h) - f(std::max(pi - h, 0.0))) / (pi + h - std::max(pi - h, 0.0));
    for (int j = i + 1; j < n; ++j) {
      const double pj = points[static_cast<size_t>(j)];
      const double v = (f(pi) - f(pj)) / (pi - pj);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return symmetrize(m);
}

namespace {

struct LoewnerTrial {
  std::vector<double> points;
  double min_eig = 0.0;
  double tol = 0.0;
};

LoewnerTrial loewner_trial(const ScalarFunction& f, const MonotoneConfig& cfg, std::size_t i) {
  Rng rng(derive_seed(cfg.seed, 0xA0000000ULL + i));
  const int n = rng.uniform_int(2, std::max(2, cfg.n_max));
  LoewnerTrial t;
  t.points.resize(static_cast<size_t>(n));
  for (auto& p : t.points) p = rng.log_uniform(cfg.t_min, cfg.t_max);
  std::sort(t.points.begin(), t.points.end());
  for (size_t j = 1; j < t.points.size(); ++j)
    t.points[j] = std::max(t.points[j], t.points[j - 1] + 2e-8);
  const HermitianMatrix l = loewner_matrix(f, t.points);
  t.min_eig = min_eigenvalue(l);
  // The diagonal carries central-difference noise of order ulp(f)/step ~
  // 1e-10 |f|; rank-deficient Loewner matrices (the harmonic generator's is
  // exactly rank one) sit on the PSD boundary and need that slack.
  double fmax = 1.0;
  for (double p : t.points) fmax = std::max(fmax, std::abs(f(p)));
  t.tol = std::max(TolerancePolicy{}.effective(spectral_norm(l)), 2e-10 * fmax);
  return t;
}

struct PairTrial {
  HermitianMatrix a;
  HermitianMatrix b;
  double min_eig = 0.0;
  double tol = 0.0;
};

PairTrial matrix_pair_trial(const ScalarFunction& f, const MonotoneConfig& cfg, std::size_t i) {
  Rng rng(derive_seed(cfg.seed, 0xB0000000ULL + i));
  const int dim = cfg.dims[static_cast<size_t>(rng.uniform_int(
      0, static_cast<int>(cfg.dims.size()) - 1))];
  PairTrial t;
  if (rng.uniform() < 0.5) {
    const double factor = rng.log_uniform(1.1, 8.0);
    auto [a, b] = gen_dominated_pair(dim, rng.next_u64(), factor);
    t.a = a;
    t.b = b;
  } else {
    // PSD bump of random rank: B = A + sum of r outer products
    t.a = hermitian_from_spectrum(log_uniform_spectrum(dim, cfg.t_min, cfg.t_max, rng), rng);
    const int rank = rng.uniform_int(1, dim);
    const double scale = rng.log_uniform(1e-2, 2.0) * spectral_norm(t.a) / dim;
    Matrix bump(dim);
    for (int r = 0; r < rank; ++r) {
      std::vector<cplx> w(static_cast<size_t>(dim));
      for (auto& v : w) v = cplx(rng.normal(), rng.normal());
      for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q)
          bump(p, q) += scale * w[static_cast<size_t>(p)] * std::conj(w[static_cast<size_t>(q)]);
    }
    t.b = t.a + symmetrize(bump);
  }
  const TolerancePolicy pol;
  const double clamp = pol.effective({spectral_norm(t.a), spectral_norm(t.b)});
  const HermitianMatrix fa = apply_spectral(f.eval, t.a, 0.0, clamp);
  const HermitianMatrix fb = apply_spectral(f.eval, t.b, 0.0, clamp);
  t.min_eig = min_eigenvalue(fb - fa);
  t.tol = pol.effective({spectral_norm(fa), spectral_norm(fb)});
  return t;
}

}  // namespace

MonotonicityVerdict numeric_operator_monotone(const ScalarFunction& f, const MonotoneConfig& cfg,
                                              ExecMode mode) {
  MonotonicityVerdict verdict;
  verdict.config_digest = "numeric;" + cfg.digest() + ";f=" + f.label;
  const auto n = static_cast<std::size_t>(std::max(cfg.trials, 0));

  auto [hit_a, ran_a] = run_until_hit(n, mode, kChunk, [&](std::size_t i) {
    const LoewnerTrial t = loewner_trial(f, cfg, i);
    return t.min_eig < -t.tol;
  });
  verdict.trials_run += ran_a;
  if (hit_a >= 0) {
    const LoewnerTrial t = loewner_trial(f, cfg, static_cast<std::size_t>(hit_a));
    verdict.violated = true;
    verdict.counterexample.kind = Counterexample::Kind::PointSet;
    verdict.counterexample.points = t.points;
    verdict.counterexample.min_eig = t.min_eig;
    verdict.counterexample.trial_index = hit_a;
    verdict.counterexample.trial_seed = derive_seed(cfg.seed, 0xA0000000ULL + hit_a);
    return verdict;
  }

  auto [hit_b, ran_b] = run_until_hit(n, mode, kChunk, [&](std::size_t i) {
    const PairTrial t = matrix_pair_trial(f, cfg, i);
    return t.min_eig < -t.tol;
  });
  verdict.trials_run += ran_b;
  if (hit_b >= 0) {
    const PairTrial t = matrix_pair_trial(f, cfg, static_cast<std::size_t>(hit_b));
    verdict.violated = true;
    verdict.counterexample.kind = Counterexample::Kind::MatrixPair;
    verdict.counterexample.a = t.a;
    verdict.counterexample.b = t.b;
    verdict.counterexample.min_eig = t.min_eig;
    verdict.counterexample.trial_index = hit_b;
    verdict.counterexample.trial_seed = derive_seed(cfg.seed, 0xB0000000ULL + hit_b);
  }
  return verdict;
}

namespace {

struct HypTrial {
  HermitianMatrix x;
  HermitianMatrix y;
  double min_eig = 0.0;
  double tol = 0.0;
};

HypTrial hypothesis_trial(const ScalarFunction& f, const MonotoneConfig& cfg, std::size_t i) {
  Rng rng(derive_seed(cfg.seed, 0xC0000000ULL + i));
  const int dim = cfg.dims[static_cast<size_t>(rng.uniform_int(
      0, static_cast<int>(cfg.dims.size()) - 1))];
  HypTrial t;
  t.x = hermitian_from_spectrum(log_uniform_spectrum(dim, cfg.t_min, cfg.t_max, rng), rng);
  t.y = hermitian_from_spectrum(log_uniform_spectrum(dim, cfg.t_min, cfg.t_max, rng), rng);
  const InequalityReport rep = characterization_hypothesis_check(f, t.x, t.y);
  t.min_eig = rep.min_residual_eig;
  t.tol = rep.tol_used;
  return t;
}

}  // namespace

MonotonicityVerdict characterize_via_hypothesis(const ScalarFunction& f,
                                                const MonotoneConfig& cfg, ExecMode mode) {
  MonotonicityVerdict verdict;
  verdict.config_digest = "hypothesis;" + cfg.digest() + ";f=" + f.label;
  const auto n = static_cast<std::size_t>(std::max(cfg.trials, 0));

  auto [hit, ran] = run_until_hit(n, mode, kChunk, [&](std::size_t i) {
    const HypTrial t = hypothesis_trial(f, cfg, i);
    return t.min_eig < -t.tol;
  });
  verdict.trials_run = ran;
  if (hit >= 0) {
    const HypTrial t = hypothesis_trial(f, cfg, static_cast<std::size_t>(hit));
    verdict.violated = true;
    verdict.counterexample.kind = Counterexample::Kind::HypothesisPair;
    verdict.counterexample.a = t.x;
    verdict.counterexample.b = t.y;
    verdict.counterexample.min_eig = t.min_eig;
    verdict.counterexample.trial_index = hit;
    verdict.counterexample.trial_seed = derive_seed(cfg.seed, 0xC0000000ULL + hit);
  }

  MonotoneConfig inner = cfg;
  inner.seed = derive_seed(cfg.seed, 0xCCULL);
  const MonotonicityVerdict numeric = numeric_operator_monotone(f, inner, mode);
  verdict.cross_checked = true;
  verdict.numeric_violated = numeric.violated;
  verdict.oracles_agree = (verdict.violated == numeric.violated);
  return verdict;
}

HokSearchResult counterexample_search_hok(const MeanRepresentation& rep,
                                          const MonotoneConfig& cfg, ExecMode mode) {
  constexpr int kThetaGrid = 32;
  constexpr int kEpsGrid = 16;
  const double quarter_pi = std::numbers::pi / 4.0;

  struct Candidate {
    bool violated = false;
    double min_eig = 0.0;
    double theta = 0.0;
    double eps = 0.0;
    double condition_min_eig = 0.0;
    HermitianMatrix a, b;
  };

  auto grid_trial = [&](std::size_t idx) {
    const int ti = static_cast<int>(idx) / kEpsGrid;
    const int ei = static_cast<int>(idx) % kEpsGrid;
    const double theta =
        std::exp(std::log(1e-3) + (std::log(quarter_pi) - std::log(1e-3)) * ti / (kThetaGrid - 1));
    const double eps = std::exp(std::log(1e-6) + (std::log(1e-2) - std::log(1e-6)) * ei /
                                                     (kEpsGrid - 1));
    auto [p, q] = gen_projection_pair(theta);
    Candidate c;
    c.theta = theta;
    c.eps = eps;
    c.a = p + eps * HermitianMatrix::identity(2);
    c.b = q + eps * HermitianMatrix::identity(2);
    const HokReport hok = hok_check(rep, c.a, c.b);
    c.min_eig = hok.ineq.min_residual_eig;
    c.condition_min_eig = hok.condition_min_eig;
    c.violated = !hok.ineq.holds;
    return c;
  };

  auto random_trial = [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, 0xD0000000ULL + i));
    const int dim = cfg.dims[static_cast<size_t>(rng.uniform_int(
        0, static_cast<int>(cfg.dims.size()) - 1))];
    Candidate c;
    c.a = hermitian_from_spectrum(log_uniform_spectrum(dim, 1e-4, 1.0, rng), rng);
    c.b = hermitian_from_spectrum(log_uniform_spectrum(dim, 1e-4, 1.0, rng), rng);
    const HokReport hok = hok_check(rep, c.a, c.b);
    c.min_eig = hok.ineq.min_residual_eig;
    c.condition_min_eig = hok.condition_min_eig;
    c.violated = !hok.ineq.holds;
    return c;
  };

  const std::size_t n_grid = static_cast<std::size_t>(kThetaGrid) * kEpsGrid;
  const std::size_t n_random = static_cast<std::size_t>(std::max(cfg.trials, 0));
  const auto grid = run_indexed<Candidate>(n_grid, mode, grid_trial);
  const auto random = run_indexed<Candidate>(n_random, mode, random_trial);

  HokSearchResult out;
  out.trials_run = n_grid + n_random;
  bool have = false;
  auto consider = [&](const Candidate& c) {
    if (!c.violated) return;
    if (!have || c.min_eig < out.best_min_eig) {
      have = true;
      out.found = true;
      out.best_min_eig = c.min_eig;
      out.theta = c.theta;
      out.epsilon = c.eps;
      out.a = c.a;
      out.b = c.b;
      out.condition_min_eig = c.condition_min_eig;
    }
  };
  for (const auto& c : grid) consider(c);
  for (const auto& c : random) consider(c);
  return out;
}

}  // namespace lomean
