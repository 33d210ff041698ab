#include "qsearch/grover.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

GroverAngles grover_angles(const SearchProblem& p) {
    const double ratio = static_cast<double>(p.solution_count()) /
                         static_cast<double>(p.search_space());
    const double half = std::asin(std::sqrt(ratio));
    return GroverAngles{2.0 * half, half};
}

StateVector apply_diffusion(StateVector s) {
    kernels::fwht(s.amps);
    kernels::scale_two_level(s.amps, 1.0, -1.0);
    kernels::fwht(s.amps);
    return s;
}

StateVector grover_iterate(const SearchProblem& p, int iterations) {
    if (iterations < 0) {
        throw InvalidArgument("negative iteration count");
    }
    StateVector s = uniform_state(p.n());
    for (int k = 0; k < iterations; ++k) {
        s = apply_diffusion(apply_phase_oracle(p, std::move(s)));
    }
    return s;
}

int optimal_iterations(const SearchProblem& p) {
    const double theta = grover_angles(p).theta;
    const double continuous = std::numbers::pi / (2.0 * theta) - 0.5;
    const auto lo = static_cast<long>(std::max(0.0, std::floor(continuous)));
    const auto hi = static_cast<long>(std::max(0.0, std::ceil(continuous)));

    const auto prob = [&](long k) {
        const double s = std::sin(theta / 2.0 + static_cast<double>(k) * theta);
        return s * s;
    };
    const double p_lo = prob(lo);
    const double p_hi = prob(hi);
    // ties go to fewer oracle calls
    if (p_hi > p_lo + 1e-12) return static_cast<int>(hi);
    return static_cast<int>(lo);
}

double success_probability(const SearchProblem& p, const StateVector& s) {
    if (s.n != p.n()) {
        throw DimensionMismatch("probability of a " + std::to_string(p.n()) +
                                "-qubit problem on a " + std::to_string(s.n) +
                                "-qubit register");
    }
    double mass = 0.0;
    for (std::uint64_t x : p.solutions()) {
        mass += std::norm(s.amps[x]);
    }
    return mass;
}

}  // namespace qsearch
