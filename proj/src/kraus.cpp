#include "qsearch/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsearch/errors.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

namespace {

// diagonal of K K^dagger in its eigenbasis (computational for the bare
// convention, Walsh for the full one): p * g_i^2
struct CompletionLevels {
    double first;
    double rest;
};

CompletionLevels completion_levels(const KrausPair& k) {
    const auto clamp_sqrt = [](double eigenvalue) {
        // eigenvalues of I - K K^dagger are >= 0 by the choice of p; clamp
        // the roundoff band [-1e-12, 0) to zero
        if (eigenvalue < 0.0 && eigenvalue >= -1e-12) return 0.0;
        if (eigenvalue < 0.0) {
            throw InvalidArgument("completion eigenvalue " + std::to_string(eigenvalue) +
                                  " below the clamping band");
        }
        return std::sqrt(eigenvalue);
    };
    const double g0 = k.metric.g00;
    const double g1 = k.metric.lam;
    return CompletionLevels{clamp_sqrt(1.0 - k.p_norm * g0 * g0),
                            clamp_sqrt(1.0 - k.p_norm * g1 * g1)};
}

}  // namespace

KrausPair kraus_pair(const MetricDiagonal& m, KrausConvention convention) {
    const double norm = m.spectral_norm();
    return KrausPair{m, convention, 1.0 / (norm * norm)};
}

StateVector kraus_input_state(const KrausPair& k, const SearchProblem& p) {
    // Both conventions act on the plain oracle state: the sign factor V of
    // the singular value split is folded into the branch operator itself
    // (sqrt(p) D' V = sqrt(p) g), which leaves every probability unchanged
    // and keeps the post-selected signs on the g U_f |psi> pattern.
    if (p.n() != k.metric.n) {
        throw DimensionMismatch("channel input register size mismatch");
    }
    return apply_phase_oracle(p, uniform_state(p.n()));
}

StateVector apply_kraus_op(const KrausPair& k, StateVector s) {
    if (s.n != k.metric.n) {
        throw DimensionMismatch("Kraus operator register size mismatch");
    }
    const double root_p = std::sqrt(k.p_norm);
    if (k.convention == KrausConvention::BareDiagonal) {
        kernels::scale_two_level(s.amps, root_p * k.metric.g00, -root_p * k.metric.lam);
        return s;
    }
    kernels::fwht(s.amps);
    kernels::scale_two_level(s.amps, root_p * k.metric.g00, -root_p * k.metric.lam);
    kernels::fwht(s.amps);
    return s;
}

StateVector apply_completion(const KrausPair& k, StateVector s) {
    if (s.n != k.metric.n) {
        throw DimensionMismatch("completion operator register size mismatch");
    }
    const CompletionLevels f = completion_levels(k);
    if (k.convention == KrausConvention::BareDiagonal) {
        kernels::scale_two_level(s.amps, f.first, f.rest);
        return s;
    }
    kernels::fwht(s.amps);
    kernels::scale_two_level(s.amps, f.first, f.rest);
    kernels::fwht(s.amps);
    return s;
}

double branch_probability(const KrausPair& k, const SearchProblem& p) {
    if (p.n() != k.metric.n) {
        throw DimensionMismatch("branch probability across different register sizes");
    }
    return apply_kraus_op(k, kraus_input_state(k, p)).squared_norm();
}

double closed_form_branch_probability(const SearchProblem& p, double phi) {
    const double theta = grover_angles(p).theta;
    if (!(phi > theta) || !(phi < std::numbers::pi / 2.0)) {
        throw PhiOutOfRange("closed form requires theta < phi < pi/2");
    }
    const MetricDiagonal m = metric_params(p, phi);
    const double ratio = m.g00 / m.lam;
    return 1.0 - (1.0 - ratio * ratio) / static_cast<double>(p.search_space());
}

StateVector post_selected_state(const KrausPair& k, const SearchProblem& p) {
    StateVector s = apply_kraus_op(k, kraus_input_state(k, p));
    const double mass = s.squared_norm();
    if (mass <= 1e-15) {
        throw BranchImpossible("branch probability vanishes; nothing to post-select");
    }
    const double scale = 1.0 / std::sqrt(mass);
    for (Complex& a : s.amps) a *= scale;
    return s;
}

double solution_overlap_sum(const SearchProblem& p, double phi, KrausConvention c) {
    const KrausPair k = kraus_pair(metric_params(p, phi), c);
    // A without the sqrt(p) normalization
    StateVector s = kraus_input_state(k, p);
    if (c == KrausConvention::BareDiagonal) {
        kernels::scale_two_level(s.amps, k.metric.g00, -k.metric.lam);
    } else {
        kernels::fwht(s.amps);
        kernels::scale_two_level(s.amps, k.metric.g00, -k.metric.lam);
        kernels::fwht(s.amps);
    }
    return success_probability(p, s);
}

double total_success(const SearchProblem& p, double phi, KrausConvention c) {
    const KrausPair k = kraus_pair(metric_params(p, phi), c);
    return success_probability(p, apply_kraus_op(k, kraus_input_state(k, p)));
}

ShotStats sample_shots(const SearchProblem& p, double phi, KrausConvention c,
                       std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw InvalidArgument("shot count must be >= 1");
    }
    const KrausPair k = kraus_pair(metric_params(p, phi), c);
    const double p_branch = branch_probability(k, p);
    const StateVector post = post_selected_state(k, p);

    // cumulative distribution of the post-selected register
    const std::uint64_t size = p.search_space();
    std::vector<double> cdf(size);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < size; ++i) {
        acc += std::norm(post.amps[i]);
        cdf[i] = acc;
    }

    std::uint64_t branch_hits = 0;
    std::uint64_t solution_hits = 0;
    const auto total = static_cast<std::int64_t>(shots);
#pragma omp parallel for schedule(static) reduction(+ : branch_hits, solution_hits)
    for (std::int64_t i = 0; i < total; ++i) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(i));
        if (rng.uniform01() >= p_branch) continue;
        ++branch_hits;
        const double u = rng.uniform01() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = static_cast<std::uint64_t>(
            std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(size) - 1));
        if (p.is_solution(idx)) ++solution_hits;
    }

    ShotStats stats;
    stats.shots = shots;
    stats.branch_successes = branch_hits;
    stats.solution_successes = solution_hits;
    stats.seed = seed;
    stats.empirical_p_branch = static_cast<double>(branch_hits) / static_cast<double>(shots);
    stats.empirical_p_total = static_cast<double>(solution_hits) / static_cast<double>(shots);
    return stats;
}

DenseMatrix channel_apply_density(const KrausPair& k, const DenseMatrix& rho) {
    if (k.metric.n > 6) {
        throw OracleSizeExceeded("dense channel application capped at n = 6");
    }
    const std::int64_t dim = std::int64_t{1} << k.metric.n;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw DimensionMismatch("density matrix dimension mismatch");
    }
    const DenseMatrix K =
        dense_from_columns([&](StateVector s) { return apply_kraus_op(k, std::move(s)); }, dim);
    const DenseMatrix F =
        dense_from_columns([&](StateVector s) { return apply_completion(k, std::move(s)); }, dim);
    return K * rho * K.adjoint() + F * rho * F.adjoint();
}

}  // namespace qsearch
