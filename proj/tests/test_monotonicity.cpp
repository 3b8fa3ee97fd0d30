#include <doctest.h>

#include <cmath>

#include "lomean/inequalities.hpp"
#include "lomean/monotonicity.hpp"
#include "lomean/spectral.hpp"

using namespace lomean;

namespace {

MonotoneConfig quick_config(int trials = 600) {
  MonotoneConfig cfg;
  cfg.trials = trials;
  cfg.seed = 2024;
  return cfg;
}

}  // namespace

TEST_CASE("loewner_matrix fixed values") {
  SUBCASE("identity function gives the all-ones matrix") {
    const HermitianMatrix l = loewner_matrix(lookup_function("identity"), {1.0, 2.0, 5.0});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(l(i, j).real() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(min_eigenvalue(l) >= -1e-9);
  }
  SUBCASE("sqrt on {1, 4}") {
    const HermitianMatrix l = loewner_matrix(lookup_function("sqrt"), {1.0, 4.0});
    CHECK(l(0, 0).real() == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(l(0, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(l(1, 1).real() == doctest::Approx(0.25).epsilon(1e-5));
    CHECK(min_eigenvalue(l) > 0.0);  // det = 1/72
  }
  SUBCASE("square on {1, 4} is indefinite") {
    const HermitianMatrix l = loewner_matrix(lookup_function("square"), {1.0, 4.0});
    CHECK(l(0, 0).real() == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(l(0, 1).real() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(l(1, 1).real() == doctest::Approx(8.0).epsilon(1e-5));
    CHECK(min_eigenvalue(l) < -0.5);
  }
  SUBCASE("diagonal matches analytic derivatives to 1e-5") {
    const std::vector<double> pts = {0.3, 1.7, 9.0};
    const HermitianMatrix l = loewner_matrix(lookup_function("sqrt"), pts);
    for (size_t i = 0; i < pts.size(); ++i)
      CHECK(l(static_cast<int>(i), static_cast<int>(i)).real() ==
            doctest::Approx(0.5 / std::sqrt(pts[i])).epsilon(1e-5));
  }
  SUBCASE("coincident points are rejected") {
    CHECK_THROWS_AS(loewner_matrix(lookup_function("sqrt"), {1.0, 1.0 + 1e-9}), DomainError);
    CHECK_THROWS_AS(loewner_matrix(lookup_function("sqrt"), {-1.0, 2.0}), DomainError);
  }
}

TEST_CASE("numeric_operator_monotone verdicts") {
  SUBCASE("sqrt is consistent") {
    const MonotonicityVerdict v =
        numeric_operator_monotone(lookup_function("sqrt"), quick_config());
    CHECK_FALSE(v.violated);
    CHECK(v.trials_run >= 1200);  // both phases ran in full
  }
  SUBCASE("logmean is consistent") {
    const MonotonicityVerdict v =
        numeric_operator_monotone(lookup_function("logmean"), quick_config());
    CHECK_FALSE(v.violated);
  }
  SUBCASE("square is violated and the witness replays") {
    const MonotonicityVerdict v =
        numeric_operator_monotone(lookup_function("square"), quick_config());
    REQUIRE(v.violated);
    const auto& ce = v.counterexample;
    if (ce.kind == Counterexample::Kind::PointSet) {
      const HermitianMatrix l = loewner_matrix(lookup_function("square"), ce.points);
      CHECK(min_eigenvalue(l) == doctest::Approx(ce.min_eig).epsilon(1e-9));
      CHECK(ce.min_eig < -1e-6);
    } else {
      REQUIRE(ce.kind == Counterexample::Kind::MatrixPair);
      const auto f = lookup_function("square");
      const HermitianMatrix gap =
          apply_spectral(f.eval, ce.b) - apply_spectral(f.eval, ce.a);
      CHECK(min_eigenvalue(gap) == doctest::Approx(ce.min_eig).epsilon(1e-9));
      CHECK(ce.min_eig < -1e-6);
    }
  }
  SUBCASE("serial and parallel agree bit for bit") {
    const auto f = lookup_function("cube");
    const MonotonicityVerdict vs = numeric_operator_monotone(f, quick_config(), ExecMode::Serial);
    const MonotonicityVerdict vp =
        numeric_operator_monotone(f, quick_config(), ExecMode::Parallel);
    CHECK(vs.violated == vp.violated);
    CHECK(vs.trials_run == vp.trials_run);
    CHECK(vs.counterexample.trial_index == vp.counterexample.trial_index);
    CHECK(vs.counterexample.min_eig == vp.counterexample.min_eig);
  }
}

TEST_CASE("fixed square witness from the 2x2 family") {
  // B - A = diag(1, 0) is PSD but B^2 - A^2 has determinant -1
  Matrix am(2), bm(2);
  am(0, 0) = am(0, 1) = am(1, 0) = am(1, 1) = 1.0;
  bm(0, 0) = 2.0;
  bm(0, 1) = bm(1, 0) = bm(1, 1) = 1.0;
  const HermitianMatrix a = symmetrize(am), b = symmetrize(bm);

  CHECK(min_eigenvalue(b - a) >= -1e-15);
  const auto f = lookup_function("square");
  const HermitianMatrix gap = apply_spectral(f.eval, b) - apply_spectral(f.eval, a);
  const auto sd = spectral_decompose(gap);
  CHECK(sd.eigenvalues.front() * sd.eigenvalues.back() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(sd.eigenvalues.front() < -1e-6);
}

TEST_CASE("characterize_via_hypothesis agrees with the numeric oracle") {
  SUBCASE("sqrt: consistent and agreeing") {
    const MonotonicityVerdict v =
        characterize_via_hypothesis(lookup_function("sqrt"), quick_config());
    CHECK_FALSE(v.violated);
    CHECK(v.cross_checked);
    CHECK(v.oracles_agree);
  }
  SUBCASE("square: hypothesis violated within budget, oracles agree") {
    const MonotonicityVerdict v =
        characterize_via_hypothesis(lookup_function("square"), quick_config(2000));
    CHECK(v.violated);
    CHECK(v.counterexample.kind == Counterexample::Kind::HypothesisPair);
    CHECK(v.oracles_agree);
    // the stored pair replays
    const InequalityReport replay = characterization_hypothesis_check(
        lookup_function("square"), v.counterexample.a, v.counterexample.b);
    CHECK_FALSE(replay.holds);
  }
  SUBCASE("constant functions are operator monotone") {
    const MonotonicityVerdict v =
        characterize_via_hypothesis(lookup_function("const"), quick_config());
    CHECK_FALSE(v.violated);
    CHECK(v.oracles_agree);
  }
}

TEST_CASE("tabulated functions") {
  SUBCASE("interpolation hits the nodes and extends constantly") {
    const ScalarFunction f = tabulated_function({1.0, 2.0, 4.0}, {1.0, 3.0, 5.0}, "tab");
    CHECK(f(1.0) == 1.0);
    CHECK(f(2.0) == 3.0);
    CHECK(f(1.5) == doctest::Approx(2.0));
    CHECK(f(3.0) == doctest::Approx(4.0));
    CHECK(f(0.1) == 1.0);   // constant below the first node
    CHECK(f(10.0) == 5.0);  // constant above the last
  }
  SUBCASE("bad tables are rejected") {
    CHECK_THROWS_AS(tabulated_function({1.0}, {1.0}, "t"), DomainError);
    CHECK_THROWS_AS(tabulated_function({2.0, 1.0}, {1.0, 2.0}, "t"), DomainError);
    CHECK_THROWS_AS(tabulated_function({-1.0, 1.0}, {1.0, 2.0}, "t"), DomainError);
    CHECK_THROWS_AS(tabulated_function({1.0, 2.0}, {1.0}, "t"), DomainError);
  }
  SUBCASE("a sampled square is flagged like the closed form") {
    std::vector<double> t, f;
    for (int i = 0; i <= 400; ++i) {
      const double x = 1e-2 * std::pow(1e4, i / 400.0);
      t.push_back(x);
      f.push_back(x * x);
    }
    const MonotonicityVerdict v =
        numeric_operator_monotone(tabulated_function(t, f, "tab:square"), quick_config(800));
    CHECK(v.violated);
  }
}

TEST_CASE("counterexample_search_hok") {
  MonotoneConfig cfg = quick_config(300);
  SUBCASE("arithmetic mean admits no violation") {
    const HokSearchResult r = counterexample_search_hok(MeanRepresentation::arithmetic(), cfg);
    CHECK_FALSE(r.found);
  }
  SUBCASE("discrete alpha = 1 coincides with arithmetic: none found") {
    const HokSearchResult r =
        counterexample_search_hok(MeanRepresentation::discrete(1.0, {}), cfg);
    CHECK_FALSE(r.found);
  }
  SUBCASE("geometric mean: violation found via the projection mechanism") {
    const HokSearchResult r = counterexample_search_hok(MeanRepresentation::geometric(), cfg);
    REQUIRE(r.found);
    CHECK(r.best_min_eig < 0.0);
    // the stored witness replays and its condition is indefinite
    const HokReport replay = hok_check(MeanRepresentation::geometric(), r.a, r.b);
    CHECK_FALSE(replay.ineq.holds);
    CHECK(replay.condition_min_eig < 0.0);
  }
}
