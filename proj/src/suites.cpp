#include "lomean/suites.hpp"

#include <chrono>
#include <cmath>
#include <optional>

#include "lomean/constructions.hpp"
#include "lomean/generators.hpp"
#include "lomean/inequalities.hpp"
#include "lomean/means.hpp"
#include "lomean/monotonicity.hpp"
#include "lomean/scalar_function.hpp"
#include "lomean/spectral.hpp"

namespace lomean {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  return derive_seed(derive_seed(seed, tag), index);
}

/// One evaluated check inside a suite.
struct Check {
  std::string name;
  bool expected = true;
  bool held = false;
  double min_eig = 0.0;
  double tol = 0.0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::optional<json> witness;
};

void fold(SuiteReport& rep, const Check& c, bool keep_records) {
  ++rep.checks;
  if (c.held)
    ++rep.passes;
  else
    ++rep.failures;
  if (c.expected && !c.held) {
    ++rep.unexpected_failures;
    if (rep.witness.is_null() && c.witness) rep.witness = *c.witness;
  }
  if (!c.expected && !c.held && rep.witness.is_null() && c.witness) rep.witness = *c.witness;
  if (keep_records) {
    rep.records.push_back({{"name", c.name},
                           {"holds", c.held},
                           {"expected", c.expected},
                           {"min_residual_eig", c.min_eig},
                           {"tol", c.tol},
                           {"dim", c.dim},
                           {"seed", c.seed}});
  }
}

/// Random PD pair with varied conditioning and relative scale.
std::pair<HermitianMatrix, HermitianMatrix> random_pd_pair(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const double cond_a = rng.log_uniform(2.0, 1e3);
  const double cond_b = rng.log_uniform(2.0, 1e3);
  const double scale = rng.log_uniform(0.1, 10.0);
  HermitianMatrix a = gen_pd(dim, rng.next_u64(), cond_a);
  HermitianMatrix b = scale * gen_pd(dim, rng.next_u64(), cond_b);
  return {a, b};
}

json pair_witness(const HermitianMatrix& a, const HermitianMatrix& b, double min_eig, int dim,
                  std::uint64_t seed, const std::string& function) {
  return {{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)},
          {"min_residual_eig", min_eig}, {"dim", dim},
          {"seed", seed},             {"function", function}};
}

SuiteReport base_report(const char* name, const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  rep.seed = opt.seed;
  rep.dims = opt.dims;
  rep.trials = opt.trials;
  rep.function = opt.function;
  return rep;
}

}  // namespace

json SuiteReport::to_json() const {
  return {{"suite", suite},
          {"seed", seed},
          {"dims", dims},
          {"trials", trials},
          {"function", function},
          {"checks", checks},
          {"passes", passes},
          {"failures", failures},
          {"unexpected_failures", unexpected_failures},
          {"wall_ms", wall_ms},
          {"metrics", metrics},
          {"witness", witness},
          {"records", records}};
}

SuiteReport run_reverse_cauchy_suite(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("reverse-cauchy", opt);
  const ScalarFunction f = lookup_function(opt.function);
  // the caller asserts operator monotonicity of f; every check is expected
  const bool expected = true;

  for (int dim : opt.dims) {
    auto checks = run_indexed<Check>(
        static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
          const std::uint64_t s = sub_seed(opt.seed, 0x5C1ULL + static_cast<unsigned>(dim), i);
          auto [a, b] = random_pd_pair(dim, s);
          const InequalityReport r = reverse_cauchy_residual(f, a, b, opt.pol);
          Check c{"reverse_cauchy/dim=" + std::to_string(dim) + "/trial=" + std::to_string(i),
                  expected, r.holds, r.min_residual_eig, r.tol_used, dim, s, std::nullopt};
          if (!r.holds) c.witness = pair_witness(a, b, r.min_residual_eig, dim, s, f.label);
          return c;
        });
    for (const auto& c : checks) fold(rep, c, opt.keep_records);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_hiai_ando_suite(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("hiai-ando", opt);
  const ScalarFunction f = lookup_function(opt.function);
  const bool expected = true;

  for (int dim : opt.dims) {
    auto checks = run_indexed<Check>(
        static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
          const std::uint64_t s = sub_seed(opt.seed, 0x41AULL + static_cast<unsigned>(dim), i);
          auto [a, b] = random_pd_pair(dim, s);
          const InequalityReport r = hiai_ando_check(f, a, b, opt.pol);
          Check c{"hiai_ando/dim=" + std::to_string(dim) + "/trial=" + std::to_string(i),
                  expected, r.holds, r.min_residual_eig, r.tol_used, dim, s, std::nullopt};
          if (!r.holds) c.witness = pair_witness(a, b, r.min_residual_eig, dim, s, f.label);
          return c;
        });
    for (const auto& c : checks) fold(rep, c, opt.keep_records);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_hok_suite(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("hok", opt);
  const ScalarFunction f = lookup_function(opt.function);
  const MeanRepresentation mean = MeanRepresentation::f_induced(f);

  std::size_t condition_held_count = 0;
  for (int dim : opt.dims) {
    auto checks = run_indexed<Check>(
        static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
          const std::uint64_t s = sub_seed(opt.seed, 0x40BULL + static_cast<unsigned>(dim), i);
          Rng rng(s);
          HermitianMatrix a = gen_pd(dim, rng.next_u64(), rng.log_uniform(2.0, 100.0));
          HermitianMatrix b = HermitianMatrix::zero(dim);
          if (rng.uniform() < 1.0 / 3.0) {
            // commuting partner: same eigenbasis, fresh spectrum, so AB + BA >= 0
            const auto sd = spectral_decompose(a);
            Matrix m(dim);
            for (int k = 0; k < dim; ++k) {
              const double mu = rng.log_uniform(0.05, 20.0);
              for (int p = 0; p < dim; ++p)
                for (int q = 0; q < dim; ++q)
                  m(p, q) += mu * sd.eigenvectors(p, k) * std::conj(sd.eigenvectors(q, k));
            }
            b = symmetrize(m);
          } else {
            b = rng.log_uniform(0.2, 5.0) * gen_pd(dim, rng.next_u64(), rng.log_uniform(2.0, 100.0));
          }
          const HokReport r = hok_check(mean, a, b, opt.pol);
          const bool expected = r.condition_holds;
          Check c{"hok/dim=" + std::to_string(dim) + "/trial=" + std::to_string(i) +
                      (r.condition_holds ? "/cond=1" : "/cond=0"),
                  expected, r.ineq.holds, r.ineq.min_residual_eig, r.ineq.tol_used, dim, s,
                  std::nullopt};
          if (expected && !r.ineq.holds)
            c.witness = pair_witness(a, b, r.ineq.min_residual_eig, dim, s, f.label);
          return c;
        });
    for (const auto& c : checks) {
      if (c.name.ends_with("/cond=1")) ++condition_held_count;
      fold(rep, c, opt.keep_records);
    }
  }
  rep.metrics["condition_held"] = condition_held_count;
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

namespace {

MeanRepresentation random_discrete_rep(Rng& rng) {
  const double alpha = rng.uniform(0.0, 1.0);
  const int n_atoms = rng.uniform_int(1, 3);
  std::vector<MeanAtom> atoms(static_cast<size_t>(n_atoms));
  double wsum = 0.0;
  for (auto& a : atoms) {
    a.lambda = rng.log_uniform(0.1, 10.0);
    a.weight = rng.uniform(0.1, 1.0);
    wsum += a.weight;
  }
  for (auto& a : atoms) a.weight *= (1.0 - alpha) / wsum;
  return MeanRepresentation::discrete(alpha, std::move(atoms));
}

}  // namespace

SuiteReport run_means_axioms_suite(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("means-axioms", opt);

  struct NamedMean {
    std::string name;
    std::uint64_t tag;
    bool discrete_random;
    MeanRepresentation fixed;
  };
  const std::vector<NamedMean> means = {
      {"arithmetic", 0xA1, false, MeanRepresentation::arithmetic()},
      {"geometric", 0xA2, false, MeanRepresentation::geometric()},
      {"harmonic", 0xA3, false, MeanRepresentation::harmonic()},
      {"f_induced(power:0.3)", 0xA4, false,
       MeanRepresentation::f_induced(lookup_function("power:0.3"))},
      {"f_induced(logmean)", 0xA5, false,
       MeanRepresentation::f_induced(lookup_function("logmean"))},
      {"discrete", 0xA6, true, MeanRepresentation::arithmetic()},
  };

  struct AxiomChecks {
    Check mono;
    Check transform;
  };

  for (const auto& nm : means) {
    auto checks = run_indexed<AxiomChecks>(
        static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
          const std::uint64_t s = sub_seed(opt.seed, nm.tag, i);
          Rng rng(s);
          const int dim =
              opt.dims[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(opt.dims.size()) - 1))];
          const MeanRepresentation mean = nm.discrete_random ? random_discrete_rep(rng) : nm.fixed;

          auto [a, a2] = gen_dominated_pair(dim, rng.next_u64(), rng.uniform(1.2, 3.0));
          auto [b, b2] = gen_dominated_pair(dim, rng.next_u64(), rng.uniform(1.2, 3.0));

          AxiomChecks out;
          {
            const HermitianMatrix lo = apply_mean(mean, a, b, opt.pol);
            const HermitianMatrix hi = apply_mean(mean, a2, b2, opt.pol);
            const OrderVerdict v = loewner_compare(lo, hi, opt.pol);
            out.mono = {"monotonicity/" + nm.name + "/trial=" + std::to_string(i), true, v.le(),
                        v.witness_min_eig_BmA, v.tol_used, dim, s, std::nullopt};
          }
          {
            const Matrix t = random_invertible(dim, rng);
            const HermitianMatrix lhs = congruence(t, apply_mean(mean, a, b, opt.pol));
            const HermitianMatrix rhs =
                apply_mean(mean, congruence(t, a), congruence(t, b), opt.pol);
            const OrderVerdict v = loewner_compare(lhs, rhs, opt.pol);
            out.transform = {"transformer/" + nm.name + "/trial=" + std::to_string(i), true,
                             v.le(), v.witness_min_eig_BmA, v.tol_used, dim, s, std::nullopt};
          }
          return out;
        });
    for (const auto& c : checks) {
      fold(rep, c.mono, opt.keep_records);
      fold(rep, c.transform, opt.keep_records);
    }
  }

  // normalization: I sigma I = I for random discrete representations
  constexpr int kReps = 100;
  double worst_norm_dev = 0.0;
  auto norm_checks = run_indexed<Check>(kReps, opt.mode, [&](std::size_t i) {
    const std::uint64_t s = sub_seed(opt.seed, 0xA7, i);
    Rng rng(s);
    const int dim =
        opt.dims[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(opt.dims.size()) - 1))];
    const MeanRepresentation mean = random_discrete_rep(rng);
    const HermitianMatrix id = HermitianMatrix::identity(dim);
    const double dev = spectral_norm(apply_mean(mean, id, id, opt.pol) - id);
    return Check{"normalization/discrete/trial=" + std::to_string(i), true, dev <= 1e-10, -dev,
                 1e-10, dim, s, std::nullopt};
  });
  for (const auto& c : norm_checks) {
    worst_norm_dev = std::max(worst_norm_dev, -c.min_eig);
    fold(rep, c, opt.keep_records);
  }
  rep.metrics["worst_identity_deviation"] = worst_norm_dev;
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_lemma_roundtrips(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("lemma-roundtrips", opt);

  double worst_mean = 0.0, worst_recon = 0.0, worst_l1 = 0.0;
  for (int dim : opt.dims) {
    struct RoundtripChecks {
      Check lemma1;
      Check lemma2_mean;
      Check lemma2_recon;
    };
    auto checks = run_indexed<RoundtripChecks>(
        static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
          const std::uint64_t s = sub_seed(opt.seed, 0x1E2ULL + static_cast<unsigned>(dim), i);
          Rng rng(s);
          RoundtripChecks out;

          // lemma 1 on a spectrum kept a margin inside [1, sqrt 2]
          const double delta = 1e-3;
          std::vector<double> lam(static_cast<size_t>(dim));
          for (auto& v : lam) v = rng.uniform(1.0 + delta, std::sqrt(2.0) - delta);
          const HermitianMatrix a1 = hermitian_from_spectrum(lam, rng);
          const DecompositionResult d1 = lemma1_decompose(a1, opt.pol);
          out.lemma1 = {"lemma1/dim=" + std::to_string(dim) + "/trial=" + std::to_string(i), true,
                        d1.reconstruction_residual <= 1e-9 && d1.mean_residual <= 1e-10,
                        -d1.reconstruction_residual, 1e-9, dim, s, std::nullopt};

          auto [a, b] = gen_dominated_pair(dim, rng.next_u64(), std::sqrt(2.0));
          const DecompositionResult d2 = lemma2_decompose(a, b, opt.pol);
          out.lemma2_mean = {"lemma2-mean/dim=" + std::to_string(dim) + "/trial=" + std::to_string(i),
                             true, d2.mean_residual <= 1e-10, -d2.mean_residual, 1e-10, dim, s,
                             std::nullopt};
          out.lemma2_recon = {"lemma2-recon/dim=" + std::to_string(dim) +
                                  "/trial=" + std::to_string(i),
                              true, d2.reconstruction_residual <= 1e-7,
                              -d2.reconstruction_residual, 1e-7, dim, s, std::nullopt};
          return out;
        });
    for (const auto& c : checks) {
      worst_l1 = std::max(worst_l1, -c.lemma1.min_eig);
      worst_mean = std::max(worst_mean, -c.lemma2_mean.min_eig);
      worst_recon = std::max(worst_recon, -c.lemma2_recon.min_eig);
      fold(rep, c.lemma1, opt.keep_records);
      fold(rep, c.lemma2_mean, opt.keep_records);
      fold(rep, c.lemma2_recon, opt.keep_records);
    }
  }
  rep.metrics["worst_lemma1_reconstruction"] = worst_l1;
  rep.metrics["worst_lemma2_mean_residual"] = worst_mean;
  rep.metrics["worst_lemma2_reconstruction"] = worst_recon;
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_chain_shadow(const SuiteOptions& opt, double factor_max) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("chain-shadow", opt);
  const std::vector<std::string> monotone = {"power:0.3", "sqrt",    "arithmetic",
                                             "harmonic",  "logmean", "const"};
  TolerancePolicy link_pol = opt.pol;
  link_pol.rel = std::max(link_pol.rel, 1e-8);

  struct ChainChecks {
    Check structure;
    std::vector<Check> per_f;
  };

  auto checks = run_indexed<ChainChecks>(
      static_cast<std::size_t>(opt.trials), opt.mode, [&](std::size_t i) {
        const std::uint64_t s = sub_seed(opt.seed, 0xC4A1, i);
        Rng rng(s);
        const int dim =
            opt.dims[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(opt.dims.size()) - 1))];
        const double factor = rng.log_uniform(1.05, factor_max);
        auto [a, b] = gen_dominated_pair(dim, rng.next_u64(), factor);

        const ChainResult chain = matrix_chain(a, b, opt.pol);

        // independent recomputation of the expected chain length
        const HermitianMatrix c = symmetrize(pd_inv_sqrt(a).mat() * (b.mat() * pd_inv_sqrt(a).mat()));
        const double lmax = max_eigenvalue(c);
        const int expected_k =
            lmax <= 1.0 ? 1 : std::max(1, ceil_with_slack(std::log(lmax) / std::log(std::sqrt(2.0))));

        ChainChecks out;
        const bool structure_ok = chain_links_valid(chain, link_pol) && chain.k == expected_k;
        out.structure = {"chain-structure/trial=" + std::to_string(i), true, structure_ok,
                         structure_ok ? 0.0 : -1.0, 0.0, dim, s, std::nullopt};

        for (const auto& fname : monotone) {
          const ScalarFunction f = lookup_function(fname);
          bool all_le = true;
          double worst = 0.0;
          for (size_t l = 0; l + 1 < chain.links.size(); ++l) {
            const double clamp = link_pol.effective(
                {spectral_norm(chain.links[l]), spectral_norm(chain.links[l + 1])});
            const HermitianMatrix flo = apply_spectral(f.eval, chain.links[l], 0.0, clamp);
            const HermitianMatrix fhi = apply_spectral(f.eval, chain.links[l + 1], 0.0, clamp);
            const OrderVerdict v = loewner_compare(flo, fhi, link_pol);
            worst = std::min(worst, v.witness_min_eig_BmA);
            if (!v.le()) all_le = false;
          }
          out.per_f.push_back({"chain-f/" + fname + "/trial=" + std::to_string(i), true, all_le,
                               worst, 0.0, dim, s, std::nullopt});
        }
        return out;
      });

  for (const auto& c : checks) {
    fold(rep, c.structure, opt.keep_records);
    for (const auto& cf : c.per_f) fold(rep, cf, opt.keep_records);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_scalar_fixtures(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("scalar-fixtures", opt);

  {  // scalar_decompose reconstruction on a 100x100 grid
    double worst = 0.0;
    bool ok = true;
    for (int ia = 0; ia < 100; ++ia) {
      const double a = 0.1 * std::pow(100.0, ia / 99.0);  // log grid over [0.1, 10]
      for (int ib = 0; ib < 100; ++ib) {
        const double b = a + (std::sqrt(2.0) - 1.0) * a * ib / 99.0;
        const auto [x, y] = scalar_decompose(a, b);
        const double recon = std::sqrt(x * y) + 0.5 * (y - x);
        const double err = std::abs(recon - b) / std::max(1.0, b);
        const double sum_err = std::abs((x + y) - 2.0 * a) / a;
        worst = std::max({worst, err, sum_err});
        if (err > 1e-12 || sum_err > 1e-12 || x > a + 1e-12 || y < a - 1e-12) ok = false;
      }
    }
    fold(rep, {"scalar_decompose/grid100x100", true, ok, -worst, 1e-12, 1, opt.seed, std::nullopt},
         opt.keep_records);
    rep.metrics["scalar_decompose_worst"] = worst;
  }

  {  // h roundtrip + strict monotonicity on 1e4 points
    const double top = h_domain_top();
    const int n = 10000;
    double worst = 0.0;
    bool round_ok = true, mono_ok = true;
    double prev = h_eval(0.0);
    for (int i = 0; i < n; ++i) {
      const double t = top * i / (n - 1);
      const double s = h_eval(t);
      if (i > 0 && !(s > prev)) mono_ok = false;
      prev = s;
      const double err = std::abs(h_inverse(s) - t);
      worst = std::max(worst, err);
      if (err > 1e-12) round_ok = false;
    }
    fold(rep, {"h/roundtrip10k", true, round_ok, -worst, 1e-12, 1, opt.seed, std::nullopt},
         opt.keep_records);
    fold(rep, {"h/strictly-increasing", true, mono_ok, 0.0, 0.0, 1, opt.seed, std::nullopt},
         opt.keep_records);
    rep.metrics["h_roundtrip_worst"] = worst;

    // derivative sign change exactly at the domain top
    const double eps = 1e-6;
    const bool deriv_ok = (h_eval(top - 2 * eps) < h_eval(top - eps)) &&
                          (h_eval(top) - h_eval(top - eps) < eps);  // slope collapses at top
    fold(rep, {"h/derivative-sign", true, deriv_ok, 0.0, 0.0, 1, opt.seed, std::nullopt},
         opt.keep_records);
  }

  {  // scalar_min_bound agreement + expected verdicts on a log grid
    bool agree_ok = true, mono_ok = true, probe_square = false, probe_cube = false;
    for (const auto& name : registry_names()) {
      const ScalarFunction f = lookup_function(name);
      bool violated_somewhere = false;
      for (int i = 0; i < 200; ++i) {
        const double t = 1e-3 * std::pow(1e6, i / 199.0);
        const bool op_result = scalar_min_bound(f, t);
        const bool direct = std::min(1.0, t) <= f(t) + 1e-12;
        if (op_result != direct) agree_ok = false;
        if (!op_result) violated_somewhere = true;
      }
      if (f.claims_operator_monotone && violated_somewhere) mono_ok = false;
      if (name == "square" && violated_somewhere) probe_square = true;
      if (name == "cube" && violated_somewhere) probe_cube = true;
    }
    fold(rep, {"scalar_min_bound/agreement", true, agree_ok, 0.0, 0.0, 1, opt.seed, std::nullopt},
         opt.keep_records);
    fold(rep, {"scalar_min_bound/monotone-family", true, mono_ok, 0.0, 0.0, 1, opt.seed,
               std::nullopt},
         opt.keep_records);
    fold(rep, {"scalar_min_bound/square-cube-violate", true, probe_square && probe_cube, 0.0, 0.0,
               1, opt.seed, std::nullopt},
         opt.keep_records);
  }

  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_constructions_suite(const SuiteOptions& opt) {
  const auto t0 = clock_type::now();
  SuiteReport rep = base_report("constructions", opt);
  for (const SuiteReport& part :
       {run_lemma_roundtrips(opt), run_chain_shadow(opt), run_scalar_fixtures(opt)}) {
    rep.checks += part.checks;
    rep.passes += part.passes;
    rep.failures += part.failures;
    rep.unexpected_failures += part.unexpected_failures;
    rep.metrics[part.suite] = part.metrics;
    if (rep.witness.is_null() && !part.witness.is_null()) rep.witness = part.witness;
    for (const auto& r : part.records) rep.records.push_back(r);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "reverse-cauchy") return run_reverse_cauchy_suite(opt);
  if (name == "hiai-ando") return run_hiai_ando_suite(opt);
  if (name == "hok") return run_hok_suite(opt);
  if (name == "means-axioms") return run_means_axioms_suite(opt);
  if (name == "constructions") return run_constructions_suite(opt);
  throw DomainError("run_suite: unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
  return {"reverse-cauchy", "hiai-ando", "hok", "means-axioms", "constructions"};
}

}  // namespace lomean
