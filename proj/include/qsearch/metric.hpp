#pragma once

#include <cmath>
#include <vector>

#include "qsearch/grover.hpp"

namespace qsearch {

// Diagonal deformation diag(g00, -lam, ..., -lam) of the reflection core,
// with g00 = cos(phi)/cos(theta) and lam = sin(phi)/sin(theta). lam is
// stored positive; the minus sign is carried structurally. phi == theta
// gives g00 = lam = 1, i.e. the unitary diag(1, -1, ..., -1).
//
// Conjugating by the Walsh-Hadamard transform yields the generalized
// diffusion, which is non-unitary whenever phi != theta. Requires M < N/2
// (cos(theta) > 0) and 0 < phi < pi/2; phi <= theta is allowed so callers
// can trace the whole rotation curve, but only theta < phi < pi/2 buys a
// larger rotation than the unitary step.
struct MetricDiagonal {
    int n = 0;
    double g00 = 1.0;
    double lam = 1.0;
    double theta = 0.0;
    double phi = 0.0;

    bool advantage_regime() const { return phi > theta; }
    double spectral_norm() const { return std::max(std::abs(g00), lam); }

    // materialized diag(g00, -lam, ..., -lam); intended for small n
    std::vector<double> diagonal() const;
};

MetricDiagonal metric_params(const SearchProblem& p, double phi);

// pi/2 - theta/2: the phi that rotates the uniform state onto the solution
// span in a single application. At this phi, lam = sqrt(N/M)/2 exactly.
double optimal_phi(const SearchProblem& p);

// fwht -> diag(g) -> fwht. Non-unitary: the output is generally
// unnormalized (phi == theta is the norm-preserving special case).
StateVector apply_generalized_diffusion(const MetricDiagonal& m, StateVector s);

// Generalized diffusion * oracle applied once to the uniform state. Lands on
// cos(theta/2 + phi)|alpha> + sin(theta/2 + phi)|beta>, a unit vector for
// every phi even though the diffusion itself is non-unitary.
StateVector single_shot(const SearchProblem& p, double phi);

// The three Walsh-twisted overlap sums over ell = 1..N-1:
//   sum |<alpha|alpha_ell>|^2 = tan^2(theta/2)
//   sum |<beta|beta_ell>|^2   = cot^2(theta/2)
//   sum <alpha|alpha_ell><beta_ell|beta> = -1
// Computed by direct O(N^2) parity summation; n <= 12.
struct OverlapSums {
    double alpha_alpha = 0.0;
    double beta_beta = 0.0;
    double cross = 0.0;
};

OverlapSums basis_identity_sums(const SearchProblem& p);

// Singular value factorization g = U D' V with U = I: D' holds the
// magnitudes, V the signs, elementwise d_prime[i] * v_signs[i] = g[i].
struct SvdFactors {
    std::vector<double> d_prime;
    std::vector<int> v_signs;  // +1 / -1
};

SvdFactors svd_factor(const MetricDiagonal& m);

}  // namespace qsearch
