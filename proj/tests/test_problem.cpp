#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/problem.hpp"

using namespace qsearch;

TEST_SUITE("problem") {

TEST_CASE("construction") {
    const SearchProblem a(2, {3});
    CHECK(a.search_space() == 4);
    CHECK(a.solution_count() == 1);

    const SearchProblem b(4, {5});
    CHECK(b.search_space() == 16);
    CHECK(b.solution_count() == 1);
    CHECK(b.is_solution(5));
    CHECK(!b.is_solution(4));

    CHECK_THROWS_AS(SearchProblem(3, {0, 1, 2, 3, 4, 5, 6, 7}), InvalidProblem);
    CHECK_THROWS_AS(SearchProblem(3, {}), InvalidProblem);
    CHECK_THROWS_AS(SearchProblem(3, {8}), InvalidProblem);
    CHECK_THROWS_AS(SearchProblem(0, {0}), InvalidProblem);

    // duplicates collapse by default, fail in strict mode
    const SearchProblem lenient(3, {5, 5, 2});
    CHECK(lenient.solution_count() == 2);
    CHECK(lenient.solutions() == std::vector<std::uint64_t>{2, 5});
    CHECK_THROWS_AS(SearchProblem(3, {5, 5, 2}, true), InvalidProblem);
}

TEST_CASE("phase oracle") {
    const SearchProblem p(2, {3});
    const StateVector flipped = apply_phase_oracle(p, uniform_state(2));
    CHECK(std::abs(flipped.amps[0] - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(flipped.amps[1] - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(flipped.amps[2] - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(flipped.amps[3] - Complex{-0.5, 0.0}) < 1e-15);

    // non-solution basis states pass through untouched
    const StateVector probe = apply_phase_oracle(p, basis_state(2, 1));
    CHECK(std::abs(probe.amps[1] - Complex{1.0, 0.0}) < 1e-15);

    const StateVector twice = apply_phase_oracle(p, apply_phase_oracle(p, uniform_state(2)));
    for (std::uint64_t i = 0; i < 4; ++i) {
        CHECK(std::abs(twice.amps[i] - Complex{0.5, 0.0}) < 1e-15);
    }
    CHECK(std::abs(flipped.norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(apply_phase_oracle(p, uniform_state(3)), DimensionMismatch);
}

TEST_CASE("alpha and beta") {
    const SearchProblem p(2, {3});
    const auto [alpha, beta] = alpha_beta(p);
    const double w = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(alpha.amps[0] - Complex{w, 0.0}) < 1e-12);
    CHECK(std::abs(alpha.amps[1] - Complex{w, 0.0}) < 1e-12);
    CHECK(std::abs(alpha.amps[2] - Complex{w, 0.0}) < 1e-12);
    CHECK(std::abs(alpha.amps[3]) < 1e-15);
    CHECK(std::abs(beta.amps[3] - Complex{1.0, 0.0}) < 1e-15);

    const SearchProblem q(2, {0, 1});
    const auto [alpha2, beta2] = alpha_beta(q);
    const double r = 0.70710678118654752;
    CHECK(std::abs(alpha2.amps[2] - Complex{r, 0.0}) < 1e-12);
    CHECK(std::abs(alpha2.amps[3] - Complex{r, 0.0}) < 1e-12);
    CHECK(std::abs(beta2.amps[0] - Complex{r, 0.0}) < 1e-12);
    CHECK(std::abs(beta2.amps[1] - Complex{r, 0.0}) < 1e-12);

    for (const SearchProblem& prob : {p, q}) {
        const auto [a, b] = alpha_beta(prob);
        CHECK(std::abs(inner_product(a, a) - Complex{1.0, 0.0}) < 1e-12);
        CHECK(std::abs(inner_product(b, b) - Complex{1.0, 0.0}) < 1e-12);
        CHECK(std::abs(inner_product(a, b)) < 1e-15);
    }
}

TEST_CASE("twisted families") {
    const SearchProblem p(2, {3});

    SUBCASE("ell = 0 recovers alpha") {
        const StateVector a0 = alpha_ell(p, 0);
        const StateVector alpha = alpha_beta(p).first;
        for (std::uint64_t i = 0; i < 4; ++i) {
            CHECK(std::abs(a0.amps[i] - alpha.amps[i]) < 1e-15);
        }
    }

    SUBCASE("ell = 1 signs") {
        const StateVector a1 = alpha_ell(p, 1);
        const double w = 1.0 / std::sqrt(3.0);
        CHECK(std::abs(a1.amps[0] - Complex{w, 0.0}) < 1e-12);
        CHECK(std::abs(a1.amps[1] - Complex{-w, 0.0}) < 1e-12);
        CHECK(std::abs(a1.amps[2] - Complex{w, 0.0}) < 1e-12);
        CHECK(std::abs(a1.amps[3]) < 1e-15);
    }

    SUBCASE("range guard") {
        CHECK_THROWS_AS(alpha_ell(p, 4), IndexOutOfRange);
        CHECK_THROWS_AS(beta_ell(p, 4), IndexOutOfRange);
    }
}

TEST_CASE("twisted families stay orthonormal across all ell, k") {
    // exhaustive for small n: every pair <alpha_ell | beta_k> vanishes and
    // the families stay unit norm
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        const SearchProblem p(n, {1, size - 2});
        for (std::uint64_t ell = 0; ell < size; ++ell) {
            const StateVector a = alpha_ell(p, ell);
            const StateVector b = beta_ell(p, ell);
            CHECK(std::abs(a.squared_norm() - 1.0) < 1e-12);
            CHECK(std::abs(b.squared_norm() - 1.0) < 1e-12);
            for (std::uint64_t k = 0; k < size; ++k) {
                CHECK(std::abs(inner_product(a, beta_ell(p, k))) < 1e-12);
            }
        }
    }
}

TEST_CASE("walsh transform of a basis state decomposes along the twisted pair") {
    // fwht|ell> = cos(theta/2)|alpha_ell> + sin(theta/2)|beta_ell>
    for (int n : {2, 3, 5}) {
        const std::uint64_t size = std::uint64_t{1} << n;
        const SearchProblem p(n, {1, 3});
        const GroverAngles angles = grover_angles(p);
        for (std::uint64_t ell = 0; ell < size; ++ell) {
            const StateVector lhs = fwht(basis_state(n, ell));
            const StateVector a = alpha_ell(p, ell);
            const StateVector b = beta_ell(p, ell);
            for (std::uint64_t i = 0; i < size; ++i) {
                const Complex expected = std::cos(angles.half_theta) * a.amps[i] +
                                         std::sin(angles.half_theta) * b.amps[i];
                CHECK(std::abs(lhs.amps[i] - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("uniform state decomposes along alpha and beta") {
    for (int n : {2, 4, 7}) {
        const SearchProblem p(n, {1, 2, 3});
        const auto [alpha, beta] = alpha_beta(p);
        const GroverAngles angles = grover_angles(p);
        const StateVector u = uniform_state(n);
        CHECK(std::abs(inner_product(alpha, u) - Complex{std::cos(angles.half_theta), 0.0}) <
              1e-12);
        CHECK(std::abs(inner_product(beta, u) - Complex{std::sin(angles.half_theta), 0.0}) <
              1e-12);
        CHECK(std::sin(angles.half_theta) ==
              doctest::Approx(std::sqrt(3.0 / static_cast<double>(p.search_space())))
                  .epsilon(1e-12));
    }
}

TEST_CASE("solution spec parsing") {
    CHECK(parse_solution_spec(4, "5") == std::vector<std::uint64_t>{5});
    CHECK(parse_solution_spec(4, "1,5,7") == std::vector<std::uint64_t>{1, 5, 7});
    CHECK_THROWS_AS(parse_solution_spec(4, ""), InvalidArgument);
    CHECK_THROWS_AS(parse_solution_spec(4, "1,,3"), InvalidArgument);
    CHECK_THROWS_AS(parse_solution_spec(4, "abc"), InvalidArgument);
    CHECK_THROWS_AS(parse_solution_spec(4, "random:4"), InvalidArgument);

    const auto drawn = parse_solution_spec(5, "random:6:42");
    CHECK(drawn.size() == 6);
    CHECK(drawn == parse_solution_spec(5, "random:6:42"));
    CHECK(drawn != parse_solution_spec(5, "random:6:43"));
    const std::set<std::uint64_t> unique(drawn.begin(), drawn.end());
    CHECK(unique.size() == 6);
    for (std::uint64_t idx : drawn) CHECK(idx < 32);
}

TEST_CASE("random draws can exclude index zero") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto drawn = random_solutions(3, 5, seed, true);
        for (std::uint64_t idx : drawn) CHECK(idx != 0);
    }
    CHECK_THROWS_AS(random_solutions(3, 8, 1, false), InvalidProblem);
    CHECK_THROWS_AS(random_solutions(3, 7, 1, true), InvalidProblem);
    CHECK_THROWS_AS(random_solutions(3, 0, 1, false), InvalidProblem);
}

}  // TEST_SUITE
