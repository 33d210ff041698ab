#pragma once

#include <cstdint>

#include "qsearch/dense.hpp"
#include "qsearch/metric.hpp"

namespace qsearch {

// Which operator the flagged channel branch realizes.
//   BareDiagonal: A = g itself, measured right after the oracle with the
//     sign matrix V = diag(1,-1,...,-1) folded into the input state.
//   FullDiffusion: A = H g H, the complete generalized-diffusion pipeline.
// Both give Theta(M/N) total success; they differ by an exact factor of 4
// at the optimal phi and in the post-selected state they leave behind.
enum class KrausConvention { BareDiagonal, FullDiffusion };

// K = sqrt(p) A with the largest admissible normalization p = 1/||A||^2,
// and completion F = sqrt(I - K K^dagger), so that K^dagger K + F^dagger F
// = I and rho -> K rho K^dagger + F rho F^dagger is trace preserving.
struct KrausPair {
    MetricDiagonal metric;
    KrausConvention convention = KrausConvention::BareDiagonal;
    double p_norm = 1.0;
};

KrausPair kraus_pair(const MetricDiagonal& m, KrausConvention convention);

// The state the branch operator acts on: oracle * |psi> for both
// conventions. The sign factor V of the singular value split is folded into
// K (sqrt(p) D' V = sqrt(p) g), so it never appears on the input side.
StateVector kraus_input_state(const KrausPair& k, const SearchProblem& p);

// K applied to a register; non-unitary, output unnormalized.
StateVector apply_kraus_op(const KrausPair& k, StateVector s);

// F applied to a register; non-unitary, output unnormalized.
StateVector apply_completion(const KrausPair& k, StateVector s);

// Probability of the K branch on the convention's input state,
// p_norm * ||A input||^2, computed on statevectors (no density matrix).
double branch_probability(const KrausPair& k, const SearchProblem& p);

// 1 - (1/N)(1 - (g00/lam)^2); valid in theta < phi < pi/2 where the spectral
// norm is lam. Always strictly inside (1 - 1/N, 1) there.
double closed_form_branch_probability(const SearchProblem& p, double phi);

// Renormalized K-branch output. Under the full convention at optimal phi
// this is |beta> itself.
StateVector post_selected_state(const KrausPair& k, const SearchProblem& p);

// sum_{x in S} |<x| A U_f |psi>|^2 for the convention's A (normalization p
// not applied). Under the bare-diagonal convention at optimal phi this is 1/4 when
// 0 is not a solution.
double solution_overlap_sum(const SearchProblem& p, double phi, KrausConvention c);

// p_norm * solution_overlap_sum: the probability of winning the branch AND
// measuring a solution. Bare-diagonal convention at optimal phi: M/N when 0 is not
// a solution. Full convention at optimal phi: 4M/N.
double total_success(const SearchProblem& p, double phi, KrausConvention c);

struct ShotStats {
    std::uint64_t shots = 0;
    std::uint64_t branch_successes = 0;
    std::uint64_t solution_successes = 0;
    std::uint64_t seed = 0;
    double empirical_p_branch = 0.0;
    double empirical_p_total = 0.0;
};

// Monte Carlo over the channel: per shot, win the branch with the analytic
// branch probability, then sample a basis index from the post-selected
// distribution. Shot i draws from substream(seed, i), so counts are
// bitwise identical no matter how shots are partitioned across threads.
ShotStats sample_shots(const SearchProblem& p, double phi, KrausConvention c,
                       std::uint64_t shots, std::uint64_t seed);

// K rho K^dagger + F rho F^dagger on a dense density matrix; n <= 6.
DenseMatrix channel_apply_density(const KrausPair& k, const DenseMatrix& rho);

}  // namespace qsearch
