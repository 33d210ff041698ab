#include "qsearch/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsearch/blockenc.hpp"
#include "qsearch/cli.hpp"
#include "qsearch/dense.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/kraus.hpp"
#include "qsearch/metric.hpp"
#include "qsearch/problem.hpp"
#include "qsearch/rng.hpp"

namespace qsearch::checks {

namespace {

struct Tracker {
    bool ok = true;
    double worst = 0.0;

    void bound(double value, double limit) {
        worst = std::max(worst, value);
        if (!(value <= limit)) ok = false;
    }
    void require(bool condition) {
        if (!condition) ok = false;
    }
};

std::string describe(const Tracker& t, const std::string& extra = {}) {
    std::ostringstream os;
    os << "worst deviation " << t.worst;
    if (!extra.empty()) os << "; " << extra;
    return os.str();
}

SearchProblem random_problem(int n, std::uint64_t seed, bool half_space_cap,
                             bool exclude_zero = false) {
    SplitMix64 rng = substream(seed, 77);
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t m_cap = half_space_cap ? size / 2 - 1 : size - 1;
    const std::uint64_t m = 1 + rng.next() % std::max<std::uint64_t>(1, m_cap);
    return SearchProblem(n, random_solutions(n, m, rng.next(), exclude_zero));
}

double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto count = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

CheckResult check_single_shot_rotation() {
    Tracker t;
    for (int n = 3; n <= 10; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const SearchProblem p =
                random_problem(n, 1000 + 50ull * n + static_cast<std::uint64_t>(trial), true);
            const StateVector out = single_shot(p, optimal_phi(p));
            t.bound(std::abs(success_probability(p, out) - 1.0), 1e-9);
        }
    }
    return {"single-shot rotation lands on the solution span", t.ok, describe(t)};
}

CheckResult check_iteration_closed_form() {
    Tracker t;
    for (int n = 2; n <= 10; ++n) {
        const SearchProblem p = random_problem(n, 2000 + static_cast<std::uint64_t>(n), false);
        const auto [alpha, beta] = alpha_beta(p);
        const double theta = grover_angles(p).theta;
        const int k_max = 2 * optimal_iterations(p);
        StateVector s = uniform_state(n);
        for (int k = 0; k <= k_max; ++k) {
            const double angle = theta / 2.0 + k * theta;
            const Complex pa = inner_product(alpha, s);
            const Complex pb = inner_product(beta, s);
            t.bound(std::abs(pa - Complex{std::cos(angle), 0.0}), 1e-10);
            t.bound(std::abs(pb - Complex{std::sin(angle), 0.0}), 1e-10);
            // leftover component outside span{alpha, beta}
            StateVector residual = s;
            for (std::size_t i = 0; i < residual.amps.size(); ++i) {
                residual.amps[i] -= pa * alpha.amps[i] + pb * beta.amps[i];
            }
            t.bound(residual.norm(), 1e-10);
            if (k < k_max) s = apply_diffusion(apply_phase_oracle(p, std::move(s)));
        }
    }
    const SearchProblem big(10, {5});
    const double p25 = success_probability(big, grover_iterate(big, 25));
    Tracker t2 = t;
    t2.require(p25 >= 1.0 - 1.0 / 1024.0);
    std::ostringstream os;
    os << "N=1024 k=25 success " << p25;
    return {"iteration matches the closed-form rotation", t2.ok, describe(t, os.str())};
}

CheckResult check_overlap_identities() {
    Tracker t;
    const auto verify_sums = [&](const SearchProblem& p) {
        const double half = grover_angles(p).half_theta;
        const double tan_half = std::tan(half);
        const OverlapSums sums = basis_identity_sums(p);
        t.bound(std::abs(sums.alpha_alpha - tan_half * tan_half), 1e-9);
        t.bound(std::abs(sums.beta_beta - 1.0 / (tan_half * tan_half)), 1e-9);
        t.bound(std::abs(sums.cross - (-1.0)), 1e-9);
    };
    // exhaustive over every solution set with M < N/2 for n <= 4
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << size); ++mask) {
            if (2u * static_cast<unsigned>(std::popcount(mask)) >= size) continue;
            std::vector<std::uint64_t> sols;
            for (std::uint64_t i = 0; i < size; ++i) {
                if (mask & (std::uint64_t{1} << i)) sols.push_back(i);
            }
            verify_sums(SearchProblem(n, std::move(sols)));
        }
    }
    for (int n = 5; n <= 8; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            verify_sums(random_problem(n, 3000 + 100ull * n + static_cast<std::uint64_t>(trial),
                                       true));
        }
    }
    return {"walsh-twisted overlap sums", t.ok, describe(t)};
}

CheckResult check_kraus_totals() {
    Tracker t;
    // analytic totals: bare-diagonal convention gives M/N whenever 0 is unmarked and
    // the optimal angle stays at or above theta (M <= N/4)
    for (int n = 2; n <= 10; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            SplitMix64 rng =
                substream(4000 + 10ull * n + static_cast<std::uint64_t>(trial), 6);
            const std::uint64_t size = std::uint64_t{1} << n;
            const std::uint64_t m = 1 + rng.next() % (size / 4);
            const SearchProblem p(n, random_solutions(n, m, rng.next(), true));
            const double ratio = static_cast<double>(p.solution_count()) /
                                 static_cast<double>(p.search_space());
            const double phi = optimal_phi(p);
            t.bound(std::abs(total_success(p, phi, KrausConvention::BareDiagonal) - ratio),
                    1e-10);
            t.bound(std::abs(total_success(p, phi, KrausConvention::FullDiffusion) - 4.0 * ratio),
                    1e-10);

            if (4 * p.solution_count() < size) {  // strictly inside the advantage regime
                const KrausPair k =
                    kraus_pair(metric_params(p, phi), KrausConvention::BareDiagonal);
                const double branch = branch_probability(k, p);
                t.bound(std::abs(branch - closed_form_branch_probability(p, phi)), 1e-10);
                t.require(branch > 1.0 - 1.0 / static_cast<double>(size) && branch < 1.0);
            }
        }
    }

    // branch probability against the dense channel trace
    {
        const SearchProblem p(4, {5, 9, 11});
        const KrausPair k =
            kraus_pair(metric_params(p, optimal_phi(p)), KrausConvention::BareDiagonal);
        const StateVector input = kraus_input_state(k, p);
        const Eigen::VectorXcd v = to_eigen(input);
        const DenseMatrix rho = v * v.adjoint();
        const DenseMatrix K = dense_from_columns(
            [&](StateVector s) { return apply_kraus_op(k, std::move(s)); }, 16);
        const double dense_trace = (K * rho * K.adjoint()).trace().real();
        t.bound(std::abs(dense_trace - branch_probability(k, p)), 1e-10);
    }

    // seeded Monte Carlo within 3 sigma of M/N
    const SearchProblem mc(4, {5});
    const ShotStats stats =
        sample_shots(mc, optimal_phi(mc), KrausConvention::BareDiagonal, 100000, 20240);
    const double expectation = 1.0 / 16.0;
    const double sigma = std::sqrt(expectation * (1.0 - expectation) / 100000.0);
    Tracker t2 = t;
    t2.require(std::abs(stats.empirical_p_total - expectation) <= 3.0 * sigma);
    std::ostringstream os;
    os << "MC total " << stats.empirical_p_total << " vs " << expectation << " (3sigma "
       << 3.0 * sigma << ")";
    return {"post-selection totals and branch probabilities", t2.ok, describe(t, os.str())};
}

CheckResult check_channel_validity() {
    Tracker t;
    const SearchProblem p(5, {3, 17, 21});
    for (const auto convention :
         {KrausConvention::BareDiagonal, KrausConvention::FullDiffusion}) {
        for (const double phi : {optimal_phi(p), 0.9, grover_angles(p).theta}) {
            const KrausPair k = kraus_pair(metric_params(p, phi), convention);
            const std::int64_t dim = 32;
            const DenseMatrix K = dense_from_columns(
                [&](StateVector s) { return apply_kraus_op(k, std::move(s)); }, dim);
            const DenseMatrix F = dense_from_columns(
                [&](StateVector s) { return apply_completion(k, std::move(s)); }, dim);
            const DenseMatrix completeness = K.adjoint() * K + F.adjoint() * F;
            t.bound((completeness - DenseMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(),
                    1e-10);

            // trace preservation on a random density matrix
            SplitMix64 rng = substream(99, static_cast<std::uint64_t>(phi * 1e6));
            Eigen::VectorXcd v(dim);
            for (Eigen::Index i = 0; i < dim; ++i) {
                v(i) = Complex{rng.uniform01() - 0.5, rng.uniform01() - 0.5};
            }
            DenseMatrix rho = v * v.adjoint();
            rho /= rho.trace().real();
            const DenseMatrix evolved = channel_apply_density(k, rho);
            t.bound(std::abs(evolved.trace().real() - 1.0), 1e-10);
            t.bound(std::abs(evolved.trace().imag()), 1e-10);
        }
    }

    // phi = theta collapses the whole pipeline to one unitary search step
    {
        const double theta = grover_angles(p).theta;
        const MetricDiagonal m = metric_params(p, theta);
        const DenseMatrix deformed = dense_from_columns(
            [&](StateVector s) {
                return apply_generalized_diffusion(m, apply_phase_oracle(p, std::move(s)));
            },
            32);
        const DenseMatrix unitary = dense_from_columns(
            [&](StateVector s) { return apply_diffusion(apply_phase_oracle(p, std::move(s))); },
            32);
        t.bound((deformed - unitary).cwiseAbs().maxCoeff(), 1e-10);
    }
    return {"channel completeness, trace preservation, unitary limit", t.ok, describe(t)};
}

CheckResult check_block_identities() {
    Tracker t;
    for (int n = 2; n <= 6; ++n) {
        const SearchProblem p = random_problem(n, 6000 + static_cast<std::uint64_t>(n), true);
        const BlockEncoding enc = block_encode(metric_params(p, optimal_phi(p)));
        const DenseMatrix walk = dense_walk(enc);
        const std::int64_t dim = std::int64_t{2} << n;
        t.bound((walk.adjoint() * walk - DenseMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff(),
                1e-10);

        DenseMatrix power = DenseMatrix::Identity(dim, dim);
        for (int d = 0; d <= 32; ++d) {
            const std::vector<double> block = chebyshev_block(enc, d);
            const std::int64_t half = dim / 2;
            for (std::int64_t i = 0; i < half; ++i) {
                for (std::int64_t j = 0; j < half; ++j) {
                    const Complex expected =
                        (i == j) ? Complex{block[static_cast<std::size_t>(i)], 0.0}
                                 : Complex{0.0, 0.0};
                    t.bound(std::abs(power(i, j) - expected), 1e-10);
                }
            }
            power = power * walk;
        }
    }
    return {"walk unitarity and chebyshev corner blocks", t.ok, describe(t)};
}

CheckResult check_query_scaling() {
    Tracker t;
    std::vector<double> sizes;
    std::vector<double> calls;
    std::uint64_t calls_at_1024 = 0;
    for (int n = 4; n <= 12; ++n) {
        const SearchProblem p(n, {1});
        const auto [rounds, ledger] = rounds_needed(p, optimal_phi(p), 0.99);
        sizes.push_back(static_cast<double>(p.search_space()));
        calls.push_back(static_cast<double>(ledger.oracle_calls));
        if (n == 10) calls_at_1024 = ledger.oracle_calls;
    }
    const double slope = fit_log_slope(sizes, calls);
    t.require(slope >= 0.45 && slope <= 0.55);
    t.require(calls_at_1024 == 25);
    const SearchProblem grover_ref(10, {1});
    t.require(optimal_iterations(grover_ref) == 25);

    for (const double p_norm : {1.0, 0.5, 0.25, 0.1, 1.0 / 256.0}) {
        for (const double eps : {0.5, 0.1, 1e-3, 1e-6}) {
            const double d = degree_for_error(p_norm, eps);
            const double ratio = d * std::sqrt(p_norm) / std::log(2.0 / eps);
            t.require(ratio >= 1.0 && ratio <= 2.0);
        }
    }
    std::ostringstream os;
    os << "fit exponent " << slope << ", oracle calls at N=1024: " << calls_at_1024;
    return {"amplification query scaling", t.ok, os.str()};
}

CheckResult check_pinned_regressions() {
    Tracker t;
    const SearchProblem p16(4, {5});
    const KrausPair k16 =
        kraus_pair(metric_params(p16, optimal_phi(p16)), KrausConvention::BareDiagonal);
    t.bound(std::abs(branch_probability(k16, p16) - 0.93877551), 1e-8);

    const SearchProblem p8(3, {3});
    t.bound(std::abs(solution_overlap_sum(p8, optimal_phi(p8), KrausConvention::BareDiagonal) -
                     0.25),
            1e-10);
    const SearchProblem p8zero(3, {0});
    t.bound(std::abs(solution_overlap_sum(p8zero, optimal_phi(p8zero),
                                          KrausConvention::BareDiagonal) -
                     1.0 / 36.0),
            1e-10);
    return {"pinned regression values", t.ok, describe(t)};
}

CheckResult check_reproducibility() {
    Tracker t;
    const auto capture = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        cli::run(args, out, err);
        return out.str();
    };

    const std::vector<std::vector<std::string>> invocations = {
        {"grover", "--n", "10", "--solutions", "5", "--iters", "auto"},
        {"metric", "--n", "6", "--solutions", "random:3:9", "--phi", "optimal"},
        {"kraus", "--n", "4", "--solutions", "5", "--phi", "optimal", "--shots", "20000",
         "--seed", "7"},
        {"block", "--n", "8", "--solutions", "3", "--phi", "optimal", "--target", "0.99"},
        {"kraus", "--n", "5", "--solutions", "2,9", "--phi", "1.1", "--convention", "full",
         "--format", "csv", "--shots", "5000", "--seed", "12"},
    };
    for (const auto& args : invocations) {
        const std::string once = capture(args);
        t.require(!once.empty());
        t.require(once == capture(args));
    }

    const std::vector<std::string> sweep_args = {"sweep", "--mode", "kraus", "--n", "4:7",
                                                 "--m",   "1",      "--seed", "11"};
    const std::string first = capture(sweep_args);
    t.require(first == capture(sweep_args));
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string serial_run = capture(sweep_args);
    omp_set_num_threads(saved);
    t.require(first == serial_run);
#endif
    return {"byte-identical reruns and worker independence", t.ok, ""};
}

}  // namespace

std::vector<CheckResult> run_all() {
    return {
        check_single_shot_rotation(), check_iteration_closed_form(), check_overlap_identities(),
        check_kraus_totals(),         check_channel_validity(),      check_block_identities(),
        check_query_scaling(),        check_pinned_regressions(),    check_reproducibility(),
    };
}

}  // namespace qsearch::checks
