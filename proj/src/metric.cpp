#include "qsearch/metric.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

std::vector<double> MetricDiagonal::diagonal() const {
    std::vector<double> d(std::uint64_t{1} << n, -lam);
    d[0] = g00;
    return d;
}

MetricDiagonal metric_params(const SearchProblem& p, double phi) {
    if (2 * p.solution_count() >= p.search_space()) {
        throw MetricDegenerate("M >= N/2: cos(theta) <= 0 leaves g00 undefined");
    }
    if (!(phi > 0.0) || !(phi < std::numbers::pi / 2.0)) {
        throw PhiOutOfRange("phi = " + std::to_string(phi) + " outside (0, pi/2)");
    }
    const double theta = grover_angles(p).theta;
    MetricDiagonal m;
    m.n = p.n();
    m.theta = theta;
    m.phi = phi;
    m.g00 = std::cos(phi) / std::cos(theta);
    m.lam = std::sin(phi) / std::sin(theta);
    return m;
}

double optimal_phi(const SearchProblem& p) {
    if (2 * p.solution_count() >= p.search_space()) {
        throw MetricDegenerate("M >= N/2: no non-degenerate deformation exists");
    }
    return std::numbers::pi / 2.0 - grover_angles(p).half_theta;
}

StateVector apply_generalized_diffusion(const MetricDiagonal& m, StateVector s) {
    if (s.n != m.n) {
        throw DimensionMismatch("diffusion for " + std::to_string(m.n) +
                                " qubits applied to a " + std::to_string(s.n) +
                                "-qubit register");
    }
    kernels::fwht(s.amps);
    kernels::scale_two_level(s.amps, m.g00, -m.lam);
    kernels::fwht(s.amps);
    return s;
}

StateVector single_shot(const SearchProblem& p, double phi) {
    const MetricDiagonal m = metric_params(p, phi);
    return apply_generalized_diffusion(m, apply_phase_oracle(p, uniform_state(p.n())));
}

OverlapSums basis_identity_sums(const SearchProblem& p) {
    if (p.n() > 12) {
        throw OracleSizeExceeded("direct O(N^2) summation capped at n = 12");
    }
    const std::uint64_t size = p.search_space();
    const auto n_num = static_cast<std::int64_t>(size);
    const double inv_nonsol = 1.0 / static_cast<double>(size - p.solution_count());
    const double inv_sol = 1.0 / static_cast<double>(p.solution_count());

    // per-ell partials land in fixed slots, then a serial sum keeps the
    // result independent of the thread count
    std::vector<double> aa(size, 0.0), bb(size, 0.0), ab(size, 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t ell = 1; ell < n_num; ++ell) {
        const auto l = static_cast<std::uint64_t>(ell);
        double sol = 0.0, nonsol = 0.0;
        std::size_t next_sol = 0;
        const auto& solutions = p.solutions();
        for (std::uint64_t m = 0; m < size; ++m) {
            const double sign = (std::popcount(l & m) & 1) ? -1.0 : 1.0;
            if (next_sol < solutions.size() && solutions[next_sol] == m) {
                sol += sign;
                ++next_sol;
            } else {
                nonsol += sign;
            }
        }
        const double a_dot = nonsol * inv_nonsol;  // <alpha|alpha_ell>
        const double b_dot = sol * inv_sol;        // <beta_ell|beta>
        aa[l] = a_dot * a_dot;
        bb[l] = b_dot * b_dot;
        ab[l] = a_dot * b_dot;
    }

    OverlapSums sums;
    for (std::uint64_t l = 1; l < size; ++l) {
        sums.alpha_alpha += aa[l];
        sums.beta_beta += bb[l];
        sums.cross += ab[l];
    }
    return sums;
}

SvdFactors svd_factor(const MetricDiagonal& m) {
    const std::uint64_t size = std::uint64_t{1} << m.n;
    SvdFactors f;
    f.d_prime.assign(size, m.lam);
    f.v_signs.assign(size, -1);
    f.d_prime[0] = std::abs(m.g00);
    f.v_signs[0] = m.g00 < 0.0 ? -1 : 1;
    return f;
}

}  // namespace qsearch
