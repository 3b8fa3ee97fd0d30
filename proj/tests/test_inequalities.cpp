#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lomean/generators.hpp"
#include "lomean/inequalities.hpp"
#include "lomean/spectral.hpp"

using namespace lomean;

namespace {

HermitianMatrix scalar1(double v) { return HermitianMatrix::diag({v}); }

}  // namespace

TEST_CASE("reverse Cauchy residual") {
  const ScalarFunction fsqrt = lookup_function("sqrt");

  SUBCASE("A = B gives a vanishing residual") {
    const HermitianMatrix a = gen_pd(3, 4, 25.0);
    const InequalityReport r = reverse_cauchy_residual(fsqrt, a, a);
    CHECK(r.holds);
    CHECK(std::abs(r.min_residual_eig) <= 1e-10 * spectral_norm(a));
  }
  SUBCASE("scalar pair (1, 4): residual exactly 1") {
    // lhs = 2.5 - 2 = 0.5, rhs = |1-4|/2 = 1.5
    const InequalityReport r = reverse_cauchy_residual(fsqrt, scalar1(1.0), scalar1(4.0));
    CHECK(r.holds);
    CHECK(r.residual(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("holds on random PD pairs for monotone generators") {
    for (const char* name : {"power:0.3", "sqrt", "harmonic", "logmean"}) {
      const ScalarFunction f = lookup_function(name);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 4);
        const HermitianMatrix a = gen_pd(dim, seed, 100.0);
        const HermitianMatrix b = gen_pd(dim, seed + 500, 100.0);
        CHECK(reverse_cauchy_residual(f, a, b).holds);
      }
    }
  }
  SUBCASE("square probe fails within a bounded seeded search") {
    const ScalarFunction probe = lookup_function("square");
    bool found = false;
    std::uint64_t seed = 0;
    for (; seed < 10000 && !found; ++seed) {
      const int dim = 2 + static_cast<int>(seed % 3);
      Rng rng(seed);
      const HermitianMatrix a = gen_pd(dim, rng.next_u64(), 50.0);
      const HermitianMatrix b =
          rng.log_uniform(0.1, 10.0) * gen_pd(dim, rng.next_u64(), 50.0);
      found = !reverse_cauchy_residual(probe, a, b).holds;
    }
    CHECK(found);
  }
}

TEST_CASE("characterization hypothesis check") {
  const ScalarFunction fsqrt = lookup_function("sqrt");

  SUBCASE("X = Y holds with zero residual") {
    const HermitianMatrix x = gen_pd(3, 8, 20.0);
    const InequalityReport r = characterization_hypothesis_check(fsqrt, x, x);
    CHECK(r.holds);
    CHECK(std::abs(r.min_residual_eig) <= 1e-9 * spectral_norm(x));
  }
  SUBCASE("identity function reduces to the reverse Cauchy theorem") {
    const ScalarFunction ident = lookup_function("identity");
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const HermitianMatrix x = gen_pd(3, seed, 40.0);
      const HermitianMatrix y = gen_pd(3, seed + 11, 40.0);
      CHECK(characterization_hypothesis_check(ident, x, y).holds);
    }
  }
  SUBCASE("scalar fixture f = sqrt, X = 1, Y = 4") {
    // f(2.5) ~ 1.5811 <= f(2 + 1.5) ~ 1.8708
    const InequalityReport r =
        characterization_hypothesis_check(fsqrt, scalar1(1.0), scalar1(4.0));
    CHECK(r.holds);
    CHECK(r.residual(0, 0).real() ==
          doctest::Approx(std::sqrt(3.5) - std::sqrt(2.5)).epsilon(1e-10));
  }
}

TEST_CASE("Hiai-Ando check") {
  const ScalarFunction fsqrt = lookup_function("sqrt");
  SUBCASE("A = B vanishes") {
    const HermitianMatrix a = gen_pd(2, 1, 10.0);
    const InequalityReport r = hiai_ando_check(fsqrt, a, a);
    CHECK(r.holds);
    CHECK(std::abs(r.min_residual_eig) <= 1e-10 * spectral_norm(a));
  }
  SUBCASE("scalar pair (1, 4)") {
    const InequalityReport r = hiai_ando_check(fsqrt, scalar1(1.0), scalar1(4.0));
    CHECK(r.holds);
    CHECK(r.residual(0, 0).real() ==
          doctest::Approx(std::sqrt(2.5) - std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("square probe has a failing dim-2 pair") {
    const ScalarFunction probe = lookup_function("square");
    bool found = false;
    for (std::uint64_t seed = 0; seed < 5000 && !found; ++seed) {
      Rng rng(seed);
      const HermitianMatrix a = gen_pd(2, rng.next_u64(), 50.0);
      const HermitianMatrix b = rng.log_uniform(0.1, 10.0) * gen_pd(2, rng.next_u64(), 50.0);
      found = !hiai_ando_check(probe, a, b).holds;
    }
    CHECK(found);
  }
}

TEST_CASE("HOK check") {
  const MeanRepresentation sharp = MeanRepresentation::geometric();

  SUBCASE("A = B: condition holds and residual vanishes") {
    const HermitianMatrix a = gen_pd(3, 6, 15.0);
    const HokReport r = hok_check(sharp, a, a);
    CHECK(r.condition_holds);
    CHECK(r.ineq.holds);
    CHECK(std::abs(r.ineq.min_residual_eig) <= 1e-9 * spectral_norm(a));
  }
  SUBCASE("commuting diagonal pairs satisfy condition and inequality") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> da(3), db(3);
      for (auto& v : da) v = rng.log_uniform(0.05, 20.0);
      for (auto& v : db) v = rng.log_uniform(0.05, 20.0);
      const HokReport r = hok_check(sharp, HermitianMatrix::diag(da), HermitianMatrix::diag(db));
      CHECK(r.condition_holds);
      CHECK(r.ineq.holds);
    }
  }
  SUBCASE("regularized projections at small angle violate HOK while the condition fails") {
    const double theta = 0.05, eps = 1e-4;
    const auto [p, q] = gen_projection_pair(theta);
    const HermitianMatrix a = p + eps * HermitianMatrix::identity(2);
    const HermitianMatrix b = q + eps * HermitianMatrix::identity(2);
    const HokReport r = hok_check(sharp, a, b);
    CHECK_FALSE(r.condition_holds);
    CHECK(r.condition_min_eig < 0.0);
    CHECK_FALSE(r.ineq.holds);
  }
  SUBCASE("arithmetic mean never violates (LHS is zero)") {
    const MeanRepresentation arith = MeanRepresentation::arithmetic();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const HermitianMatrix a = gen_pd(3, seed, 70.0);
      const HermitianMatrix b = gen_pd(3, seed + 7, 70.0);
      CHECK(hok_check(arith, a, b).ineq.holds);
    }
  }
}

TEST_CASE("projection obstruction") {
  SUBCASE("alpha = 1 holds for every theta") {
    for (double theta : {0.01, 0.3, 1.0, 1.5}) {
      CHECK(projection_obstruction(1.0, theta).holds);
    }
  }
  SUBCASE("alpha = 0.5, theta = pi/4: both the entries and the matrix fail") {
    const ObstructionRecord rec = projection_obstruction(0.5, std::numbers::pi / 4.0);
    CHECK(rec.lhs_entry11 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(rec.rhs_entry11 == doctest::Approx(std::sin(std::numbers::pi / 4.0)).epsilon(1e-10));
    CHECK(rec.rhs_entry11_printed == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rec.entry_bound_fails);
    CHECK_FALSE(rec.holds);
  }
  SUBCASE("alpha = 0.99 still fails for small enough theta") {
    const double thr = obstruction_threshold(0.99);
    CHECK(thr > 0.0);
    CHECK_FALSE(projection_obstruction(0.99, thr * 0.5).holds);
    CHECK(projection_obstruction(0.99, std::min(thr * 2.0, 1.5)).holds);
  }
  SUBCASE("threshold is monotone decreasing in alpha") {
    const double t1 = obstruction_threshold(0.5);
    const double t2 = obstruction_threshold(0.9);
    const double t3 = obstruction_threshold(0.99);
    CHECK(t1 > t2);
    CHECK(t2 > t3);
    // matrix threshold solves tan(theta/2) = 1 - alpha
    CHECK(t1 == doctest::Approx(2.0 * std::atan(0.5)).epsilon(1e-6));
    CHECK(t2 == doctest::Approx(2.0 * std::atan(0.1)).epsilon(1e-5));
  }
  SUBCASE("degenerate angles are flagged") {
    CHECK(projection_obstruction(0.5, 0.0).degenerate);
    CHECK(projection_obstruction(0.5, std::numbers::pi / 2.0).degenerate);
    CHECK_FALSE(projection_obstruction(0.5, 0.7).degenerate);
  }
}

TEST_CASE("reverse Cauchy and Hiai-Ando hold simultaneously on monotone trials") {
  for (const char* name : {"sqrt", "power:0.3", "logmean"}) {
    const ScalarFunction f = lookup_function(name);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int dim = 2 + static_cast<int>(seed % 3);
      const HermitianMatrix a = gen_pd(dim, seed, 80.0);
      const HermitianMatrix b = gen_pd(dim, seed + 41, 80.0);
      CHECK(reverse_cauchy_residual(f, a, b).holds);
      CHECK(hiai_ando_check(f, a, b).holds);
    }
  }
}

TEST_CASE("verdicts are invariant under simultaneous scaling for power generators") {
  const ScalarFunction f = lookup_function("power:0.3");
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed + 5);
    const double c = rng.log_uniform(1e-3, 1e3);
    const HermitianMatrix a = gen_pd(3, seed, 50.0);
    const HermitianMatrix b = gen_pd(3, seed + 13, 50.0);
    CHECK(reverse_cauchy_residual(f, a, b).holds ==
          reverse_cauchy_residual(f, c * a, c * b).holds);
    CHECK(hiai_ando_check(f, a, b).holds == hiai_ando_check(f, c * a, c * b).holds);
    const HokReport h1 = hok_check(MeanRepresentation::geometric(), a, b);
    const HokReport h2 = hok_check(MeanRepresentation::geometric(), c * a, c * b);
    CHECK(h1.ineq.holds == h2.ineq.holds);
    CHECK(h1.condition_holds == h2.condition_holds);
  }
}

TEST_CASE("scalar min bound") {
  const ScalarFunction fsqrt = lookup_function("sqrt");
  CHECK(scalar_min_bound(fsqrt, 4.0));    // 1 <= 2
  CHECK(scalar_min_bound(fsqrt, 0.25));   // 0.25 <= 0.5
  const ScalarFunction probe = lookup_function("square");
  CHECK_FALSE(scalar_min_bound(probe, 0.5));  // 0.5 <= 0.25 is false
  CHECK_THROWS_AS(scalar_min_bound(fsqrt, -1.0), DomainError);
}
