#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsearch/kraus.hpp"

namespace qsearch {

// One-ancilla walk unitary around the normalized diagonal a = g/||g||.
// With s_i = sqrt(1 - a_i^2), each index pair (x, N+x) transforms by the
// rotation [[a_x, -s_x], [s_x, a_x]] (ancilla is the most significant
// qubit, |0> flags the encoded branch). The ancilla-|0> corner block is
// exactly diag(a), and because each pair rotates by arccos(a_x), the d-th
// power's corner block is exactly T_d(a) elementwise.
struct BlockEncoding {
    int n = 0;
    double a_first = 1.0;  // a[0]   = g00 / ||g||
    double a_rest = -1.0;  // a[i>0] = -lam / ||g||

    std::vector<double> a_diag() const;  // materialized; small n only
};

struct QueryLedger {
    std::uint64_t oracle_calls = 0;
    std::uint64_t walk_steps = 0;
    std::uint64_t reflections = 0;
};

BlockEncoding block_encode(const MetricDiagonal& m);

// Diagonal of the ancilla-|0> block of W^degree = T_degree(a), evaluated by
// the first-kind recurrence T_{d+1} = 2x T_d - T_{d-1}.
std::vector<double> chebyshev_block(const BlockEncoding& b, int degree);

// ceil((1/sqrt(p)) * ln(2/epsilon)): polynomial degree needed to amplify the
// normalization away at accuracy epsilon.
int degree_for_error(double p_norm, double epsilon);

// W applied to an (n+1)-qubit register.
StateVector apply_walk(const BlockEncoding& b, StateVector s);

// dense 2N x 2N materialization for verification
DenseMatrix dense_walk(const BlockEncoding& b);

// Amplitude amplification of the flagged branch of the full-diffusion
// pipeline, simulated explicitly on the (n+1)-qubit register: prepare
// |0>|oracle psi>, one conjugated walk step, then `rounds` reflection pairs
// on the ancilla flag. Returns the flag probability, which must match
// sin^2((2 rounds + 1) asin(sqrt(p0))) within 1e-9 (checked internally).
double amplified_success(const SearchProblem& p, double phi, int rounds);

// Smallest round count on the first rotation arch reaching `target`, or the
// arch-maximizing count when the discrete ceiling skips past the target
// band. TargetUnreachable only when no round count whatsoever can come
// within 1e-9 of the target (degenerate rotation angles). The ledger counts
// 2j + 1 oracle calls and walk steps, 2j reflections.
std::pair<int, QueryLedger> rounds_needed(const SearchProblem& p, double phi, double target);

}  // namespace qsearch
