#include "qsearch/problem.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "qsearch/errors.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

SearchProblem::SearchProblem(int n_qubits, std::vector<std::uint64_t> solutions, bool strict)
    : n_(n_qubits), solutions_(std::move(solutions)) {
    if (n_ < 1 || n_ > kMaxQubits) {
        throw InvalidProblem("qubit count " + std::to_string(n_) + " out of range [1, " +
                             std::to_string(kMaxQubits) + "]");
    }
    if (solutions_.empty()) {
        throw InvalidProblem("solution set is empty");
    }
    const std::uint64_t size = search_space();
    for (std::uint64_t s : solutions_) {
        if (s >= size) {
            throw InvalidProblem("solution index " + std::to_string(s) + " >= N = " +
                                 std::to_string(size));
        }
    }
    std::sort(solutions_.begin(), solutions_.end());
    const auto dup = std::unique(solutions_.begin(), solutions_.end());
    if (strict && dup != solutions_.end()) {
        throw InvalidProblem("duplicate solution index");
    }
    solutions_.erase(dup, solutions_.end());
    if (solutions_.size() == size) {
        throw InvalidProblem("every index is a solution; no non-solution exists");
    }
}

bool SearchProblem::is_solution(std::uint64_t index) const {
    return std::binary_search(solutions_.begin(), solutions_.end(), index);
}

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InvalidArgument(std::string("cannot parse ") + what + " from '" +
                              std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::vector<std::uint64_t> parse_solution_spec(int n, std::string_view spec) {
    constexpr std::string_view kRandomPrefix = "random:";
    if (spec.starts_with(kRandomPrefix)) {
        std::string_view rest = spec.substr(kRandomPrefix.size());
        const std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw InvalidArgument("random solution spec must be random:M:seed");
        }
        const std::uint64_t m = parse_u64(rest.substr(0, colon), "solution count");
        const std::uint64_t seed = parse_u64(rest.substr(colon + 1), "seed");
        return random_solutions(n, m, seed);
    }
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = std::min(spec.find(',', pos), spec.size());
        out.push_back(parse_u64(spec.substr(pos, comma - pos), "solution index"));
        pos = comma + 1;
    }
    return out;
}

std::vector<std::uint64_t> random_solutions(int n, std::uint64_t m, std::uint64_t seed,
                                            bool exclude_zero) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidProblem("qubit count out of range");
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t avail = exclude_zero ? size - 1 : size;
    if (m == 0 || m >= avail) {
        throw InvalidProblem("cannot draw " + std::to_string(m) +
                             " distinct solutions from a space of " + std::to_string(avail) +
                             " leaving a non-solution");
    }
    // rejection on the masked draw; N is a power of two so the draw is unbiased
    SplitMix64 rng = substream(seed, 0);
    std::vector<std::uint64_t> out;
    std::vector<bool> taken(size, false);
    while (out.size() < m) {
        const std::uint64_t idx = rng.next_pow2(n);
        if (taken[idx] || (exclude_zero && idx == 0)) continue;
        taken[idx] = true;
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StateVector apply_phase_oracle(const SearchProblem& p, StateVector s) {
    if (s.n != p.n()) {
        throw DimensionMismatch("oracle for " + std::to_string(p.n()) +
                                " qubits applied to a " + std::to_string(s.n) +
                                "-qubit register");
    }
    for (std::uint64_t x : p.solutions()) {
        s.amps[x] = -s.amps[x];
    }
    return s;
}

std::pair<StateVector, StateVector> alpha_beta(const SearchProblem& p) {
    return {alpha_ell(p, 0), beta_ell(p, 0)};
}

namespace {

int walsh_sign(std::uint64_t ell, std::uint64_t m) {
    return (std::popcount(ell & m) & 1) ? -1 : 1;
}

}  // namespace

StateVector alpha_ell(const SearchProblem& p, std::uint64_t ell) {
    const std::uint64_t size = p.search_space();
    if (ell >= size) {
        throw IndexOutOfRange("ell = " + std::to_string(ell) + " >= N = " + std::to_string(size));
    }
    const double w = 1.0 / std::sqrt(static_cast<double>(size - p.solution_count()));
    std::vector<Complex> amps(size, Complex{0.0, 0.0});
    for (std::uint64_t m = 0; m < size; ++m) {
        if (!p.is_solution(m)) {
            amps[m] = Complex{walsh_sign(ell, m) * w, 0.0};
        }
    }
    return StateVector(p.n(), std::move(amps));
}

StateVector beta_ell(const SearchProblem& p, std::uint64_t ell) {
    const std::uint64_t size = p.search_space();
    if (ell >= size) {
        throw IndexOutOfRange("ell = " + std::to_string(ell) + " >= N = " + std::to_string(size));
    }
    const double w = 1.0 / std::sqrt(static_cast<double>(p.solution_count()));
    std::vector<Complex> amps(size, Complex{0.0, 0.0});
    for (std::uint64_t m : p.solutions()) {
        amps[m] = Complex{walsh_sign(ell, m) * w, 0.0};
    }
    return StateVector(p.n(), std::move(amps));
}

}  // namespace qsearch
