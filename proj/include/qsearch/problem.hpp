#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

// A search instance: n qubits and the marked subset S of [0, N). S must be
// nonempty and proper (at least one non-solution), so the alpha/beta
// decomposition below always exists. Immutable once built.
class SearchProblem {
public:
    // Sorts and deduplicates the index list; strict mode rejects duplicates
    // instead.
    SearchProblem(int n_qubits, std::vector<std::uint64_t> solutions, bool strict = false);

    int n() const { return n_; }
    std::uint64_t search_space() const { return std::uint64_t{1} << n_; }  // N
    std::uint64_t solution_count() const { return solutions_.size(); }     // M
    const std::vector<std::uint64_t>& solutions() const { return solutions_; }
    bool is_solution(std::uint64_t index) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> solutions_;  // sorted, unique
};

// Accepts "3", "1,5,7" or "random:M:seed" (M distinct indices drawn with the
// named seed).
std::vector<std::uint64_t> parse_solution_spec(int n, std::string_view spec);

// M distinct indices from [0, N), or from [1, N) when exclude_zero is set.
std::vector<std::uint64_t> random_solutions(int n, std::uint64_t m, std::uint64_t seed,
                                            bool exclude_zero = false);

// Flips the sign of every solution amplitude; an involution, norm preserving.
StateVector apply_phase_oracle(const SearchProblem& p, StateVector s);

// (|alpha>, |beta>): unit-norm uniform superpositions over non-solutions and
// solutions respectively; <alpha|beta> = 0.
std::pair<StateVector, StateVector> alpha_beta(const SearchProblem& p);

// Walsh-phase-twisted relatives: |alpha_ell> carries (-1)^(ell.m) on each
// non-solution |m>, where ell.m is the parity of popcount(ell & m).
// alpha_ell(p, 0) is |alpha> itself. Unit norm for every ell.
StateVector alpha_ell(const SearchProblem& p, std::uint64_t ell);
StateVector beta_ell(const SearchProblem& p, std::uint64_t ell);

}  // namespace qsearch
