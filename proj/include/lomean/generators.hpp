#pragma once

#include <cstdint>
#include <utility>

#include "lomean/matrix.hpp"
#include "lomean/rng.hpp"

namespace lomean {

/// Haar-ish random unitary: complex Ginibre matrix orthonormalized by modified
/// Gram-Schmidt (re-orthogonalized once).
Matrix random_unitary(int dim, Rng& rng);

/// Random complex invertible matrix (Ginibre; singular with probability 0).
Matrix random_invertible(int dim, Rng& rng);

/// Random Hermitian PSD matrix with eigenvalues drawn uniformly from
/// [lo, hi] in a random unitary eigenbasis.
HermitianMatrix random_psd_with_spectrum(int dim, double lo, double hi, Rng& rng,
                                         bool real_only = false);

/// Hermitian matrix with the given eigenvalues in a random unitary eigenbasis.
HermitianMatrix hermitian_from_spectrum(const std::vector<double>& eigenvalues, Rng& rng,
                                        bool real_only = false);

/// Positive definite matrix with condition number approximately cond_target:
/// eigenvalues log-spread over [1/sqrt(cond), sqrt(cond)] with the extremes
/// pinned, conjugated by a random unitary.
HermitianMatrix gen_pd(int dim, std::uint64_t seed, double cond_target = 100.0,
                       bool real_only = false);

/// Dominated pair A <= B <= factor*A with A PD, built as
/// B = A^{1/2}(I + D)A^{1/2} where D is PSD with spectrum inside (0, factor-1).
/// The spectrum of D keeps a small interior margin away from both endpoints so
/// downstream sqrt(2)-window decompositions stay away from their degenerate
/// boundary.
std::pair<HermitianMatrix, HermitianMatrix> gen_dominated_pair(int dim, std::uint64_t seed,
                                                               double factor,
                                                               double cond_target = 30.0);

/// The paper's 2x2 projection family: P = [[1,0],[0,0]] and
/// Q = [[cos^2 t, cos t sin t],[cos t sin t, sin^2 t]]; both idempotent Hermitian.
std::pair<HermitianMatrix, HermitianMatrix> gen_projection_pair(double theta);

}  // namespace lomean
