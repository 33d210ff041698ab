#include "qsearch/blockenc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

std::vector<double> BlockEncoding::a_diag() const {
    std::vector<double> a(std::uint64_t{1} << n, a_rest);
    a[0] = a_first;
    return a;
}

BlockEncoding block_encode(const MetricDiagonal& m) {
    const double norm = m.spectral_norm();
    BlockEncoding b;
    b.n = m.n;
    b.a_first = m.g00 / norm;
    b.a_rest = -m.lam / norm;
    return b;
}

namespace {

double chebyshev_scalar(double x, int degree) {
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double curr = x;
    for (int d = 1; d < degree; ++d) {
        const double next = 2.0 * x * curr - prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace

std::vector<double> chebyshev_block(const BlockEncoding& b, int degree) {
    if (degree < 0) {
        throw InvalidArgument("negative polynomial degree");
    }
    // two distinct diagonal values, so two scalar recurrences cover the block
    const double t_first = chebyshev_scalar(b.a_first, degree);
    const double t_rest = chebyshev_scalar(b.a_rest, degree);
    std::vector<double> out(std::uint64_t{1} << b.n, t_rest);
    out[0] = t_first;
    return out;
}

int degree_for_error(double p_norm, double epsilon) {
    if (!(p_norm > 0.0) || !(p_norm <= 1.0)) {
        throw InvalidArgument("normalization must lie in (0, 1]");
    }
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw InvalidArgument("error must lie in (0, 1)");
    }
    return static_cast<int>(std::ceil(std::log(2.0 / epsilon) / std::sqrt(p_norm)));
}

StateVector apply_walk(const BlockEncoding& b, StateVector s) {
    if (s.n != b.n + 1) {
        throw DimensionMismatch("walk register must carry one ancilla: expected " +
                                std::to_string(b.n + 1) + " qubits, got " + std::to_string(s.n));
    }
    const std::uint64_t size = std::uint64_t{1} << b.n;
    const double s_first = std::sqrt(std::max(0.0, 1.0 - b.a_first * b.a_first));
    const double s_rest = std::sqrt(std::max(0.0, 1.0 - b.a_rest * b.a_rest));
    const auto count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto x = static_cast<std::uint64_t>(i);
        const double a = (x == 0) ? b.a_first : b.a_rest;
        const double c = (x == 0) ? s_first : s_rest;
        const Complex top = s.amps[x];
        const Complex bottom = s.amps[size + x];
        s.amps[x] = a * top - c * bottom;
        s.amps[size + x] = c * top + a * bottom;
    }
    return s;
}

DenseMatrix dense_walk(const BlockEncoding& b) {
    const std::int64_t dim = std::int64_t{2} << b.n;
    return dense_from_columns([&](StateVector s) { return apply_walk(b, std::move(s)); }, dim);
}

namespace {

// system-register Walsh transform on both ancilla halves, conjugating the
// diagonal walk into the full-diffusion one
void fwht_halves(StateVector& reg, std::uint64_t half) {
    kernels::fwht(std::span<Complex>(reg.amps.data(), half));
    kernels::fwht(std::span<Complex>(reg.amps.data() + half, half));
}

double flag_probability(const StateVector& reg, std::uint64_t half) {
    return kernels::squared_norm(std::span<const Complex>(reg.amps.data(), half));
}

}  // namespace

double amplified_success(const SearchProblem& p, double phi, int rounds) {
    if (rounds < 0) {
        throw InvalidArgument("negative round count");
    }
    const BlockEncoding enc = block_encode(metric_params(p, phi));
    const std::uint64_t half = p.search_space();

    // |0>_anc (x) U_f |psi>
    const StateVector sys = apply_phase_oracle(p, uniform_state(p.n()));
    std::vector<Complex> amps(2 * half, Complex{0.0, 0.0});
    std::copy(sys.amps.begin(), sys.amps.end(), amps.begin());
    StateVector reg(p.n() + 1, std::move(amps));

    fwht_halves(reg, half);
    reg = apply_walk(enc, std::move(reg));
    fwht_halves(reg, half);

    const StateVector prepared = reg;
    const double p0 = flag_probability(prepared, half);

    for (int r = 0; r < rounds; ++r) {
        // flip the flagged branch, then reflect about the prepared state
        for (std::uint64_t i = 0; i < half; ++i) reg.amps[i] = -reg.amps[i];
        const Complex overlap = kernels::dot_conjugated(prepared.amps, reg.amps);
        for (std::uint64_t i = 0; i < 2 * half; ++i) {
            reg.amps[i] = 2.0 * overlap * prepared.amps[i] - reg.amps[i];
        }
    }

    const double simulated = flag_probability(reg, half);
    const double angle = std::asin(std::min(1.0, std::sqrt(p0)));
    const double expected = std::pow(std::sin((2.0 * rounds + 1.0) * angle), 2);
    if (std::abs(simulated - expected) > 1e-9) {
        throw std::logic_error("amplified branch drifted from the closed form");
    }
    return simulated;
}

std::pair<int, QueryLedger> rounds_needed(const SearchProblem& p, double phi, double target) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw InvalidArgument("target probability must lie in (0, 1)");
    }
    const KrausPair k = kraus_pair(metric_params(p, phi), KrausConvention::FullDiffusion);
    const double p0 = std::min(1.0, branch_probability(k, p));
    const double angle = std::asin(std::sqrt(p0));
    const auto success_at = [&](long j) {
        const double s = std::sin((2.0 * static_cast<double>(j) + 1.0) * angle);
        return s * s;
    };

    // scan the first rotation arch: angles (2j+1)*angle up to just past pi/2
    const long peak =
        std::max(0L, std::lround((std::numbers::pi / (2.0 * angle) - 1.0) / 2.0));
    long chosen = 0;
    double best = -1.0;
    bool met = false;
    for (long j = 0; j <= peak + 1; ++j) {
        const double v = success_at(j);
        if (v >= target) {
            chosen = j;
            met = true;
            break;
        }
        if (v > best) {
            best = v;
            chosen = j;
        }
    }

    if (!met) {
        // reachable at all? degenerate angles (e.g. branch probability 1/2)
        // cycle below the target forever
        bool reachable = false;
        const long horizon = 8 * (peak + 1) + 16;
        for (long j = 0; j <= horizon; ++j) {
            if (success_at(j) >= target - 1e-9) {
                reachable = true;
                break;
            }
        }
        if (!reachable) {
            throw TargetUnreachable("no round count reaches target " + std::to_string(target));
        }
    }

    QueryLedger ledger;
    ledger.oracle_calls = 2 * static_cast<std::uint64_t>(chosen) + 1;
    ledger.walk_steps = 2 * static_cast<std::uint64_t>(chosen) + 1;
    ledger.reflections = 2 * static_cast<std::uint64_t>(chosen);
    return {static_cast<int>(chosen), ledger};
}

}  // namespace qsearch
