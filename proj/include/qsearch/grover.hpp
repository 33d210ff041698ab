#pragma once

#include "qsearch/problem.hpp"

namespace qsearch {

// Rotation angle of one amplification step: sin(theta/2) = sqrt(M/N),
// 0 < theta < pi.
struct GroverAngles {
    double theta = 0.0;
    double half_theta = 0.0;
};

GroverAngles grover_angles(const SearchProblem& p);

// Reflection about the uniform state, applied as fwht -> diag(1,-1,...,-1)
// -> fwht. Equals 2|psi><psi| - I.
StateVector apply_diffusion(StateVector s);

// k applications of diffusion * oracle to the uniform state. The result
// stays in span{|alpha>, |beta>} with amplitudes cos/sin(theta/2 + k theta).
StateVector grover_iterate(const SearchProblem& p, int iterations);

// The k >= 0 maximizing the solution probability sin^2(theta/2 + k theta);
// ties within 1e-12 break toward fewer oracle calls.
int optimal_iterations(const SearchProblem& p);

// Squared amplitude mass on the solution set. For unnormalized inputs this
// is the raw mass, not a probability.
double success_probability(const SearchProblem& p, const StateVector& s);

}  // namespace qsearch
