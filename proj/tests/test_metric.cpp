#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qsearch/dense.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/metric.hpp"
#include "qsearch/rng.hpp"

using namespace qsearch;

namespace {

SearchProblem random_half_space_problem(int n, std::uint64_t seed) {
    SplitMix64 rng = substream(seed, 9);
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t m = 1 + rng.next() % (size / 2 - 1 ? size / 2 - 1 : 1);
    return SearchProblem(n, random_solutions(n, m, rng.next()));
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("deformation parameters") {
    SUBCASE("phi equal to theta recovers the unit diagonal") {
        const SearchProblem p(2, {3});
        const MetricDiagonal m = metric_params(p, std::numbers::pi / 3.0);
        CHECK(m.g00 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.lam == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(!m.advantage_regime());
        // and the deformed diffusion collapses onto the plain one
        const DenseMatrix deformed = dense_from_columns(
            [&](StateVector s) { return apply_generalized_diffusion(m, std::move(s)); }, 4);
        const DenseMatrix plain =
            dense_from_columns([](StateVector s) { return apply_diffusion(std::move(s)); }, 4);
        CHECK((deformed - plain).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("N=16, M=1 at the optimal angle") {
        const SearchProblem p(4, {5});
        const MetricDiagonal m = metric_params(p, optimal_phi(p));
        CHECK(m.g00 == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
        CHECK(m.lam == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(m.advantage_regime());
        CHECK(m.spectral_norm() == doctest::Approx(2.0).epsilon(1e-12));
    }

    SUBCASE("degenerate and out-of-range inputs") {
        CHECK_THROWS_AS(metric_params(SearchProblem(3, {0, 1, 2, 3}), 0.5), MetricDegenerate);
        const SearchProblem p(4, {5});
        CHECK_THROWS_AS(metric_params(p, 0.0), PhiOutOfRange);
        CHECK_THROWS_AS(metric_params(p, std::numbers::pi / 2.0), PhiOutOfRange);
        CHECK_THROWS_AS(metric_params(p, -0.3), PhiOutOfRange);
        CHECK_THROWS_AS(optimal_phi(SearchProblem(3, {0, 1, 2, 3})), MetricDegenerate);
    }
}

TEST_CASE("optimal angle") {
    CHECK(optimal_phi(SearchProblem(2, {3})) ==
          doctest::Approx(std::numbers::pi / 3.0).epsilon(1e-12));
    CHECK(optimal_phi(SearchProblem(4, {5})) ==
          doctest::Approx(1.318116071652818).epsilon(1e-12));
    // lam simplifies to sqrt(N/M)/2 at the optimal angle
    const SearchProblem big(10, {5});
    const MetricDiagonal m = metric_params(big, optimal_phi(big));
    CHECK(m.lam == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("deformed diffusion against the dense conjugation") {
    SplitMix64 rng = substream(17, 0);
    for (int n = 2; n <= 6; ++n) {
        const SearchProblem p = random_half_space_problem(n, 400 + static_cast<std::uint64_t>(n));
        const double theta = grover_angles(p).theta;
        const double phi = theta + (std::numbers::pi / 2.0 - theta) * rng.uniform01();
        const MetricDiagonal m = metric_params(p, phi);

        const std::int64_t dim = std::int64_t{1} << n;
        const DenseMatrix walsh = oracles::walsh_matrix(n);
        DenseMatrix g = DenseMatrix::Zero(dim, dim);
        for (std::int64_t i = 0; i < dim; ++i) g(i, i) = (i == 0) ? m.g00 : -m.lam;
        const DenseMatrix expected = walsh * g * walsh;

        const DenseMatrix actual = dense_from_columns(
            [&](StateVector s) { return apply_generalized_diffusion(m, std::move(s)); }, dim);
        CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("phi = theta keeps the pipeline unitary") {
    for (int n = 2; n <= 6; ++n) {
        const SearchProblem p(n, {1});
        const MetricDiagonal m = metric_params(p, grover_angles(p).theta);
        const std::int64_t dim = std::int64_t{1} << n;
        const DenseMatrix op = dense_from_columns(
            [&](StateVector s) { return apply_generalized_diffusion(m, std::move(s)); }, dim);
        CHECK(((op.adjoint() * op) - DenseMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <
              1e-10);
    }
}

TEST_CASE("single shot at the optimal angle hits the solution span") {
    const SearchProblem p(2, {3});
    const StateVector out = single_shot(p, optimal_phi(p));
    CHECK(std::abs(out.amps[0]) < 1e-10);
    CHECK(std::abs(out.amps[1]) < 1e-10);
    CHECK(std::abs(out.amps[2]) < 1e-10);
    CHECK(std::abs(out.amps[3] - Complex{1.0, 0.0}) < 1e-10);

    for (int n = 3; n <= 9; ++n) {
        const SearchProblem q = random_half_space_problem(n, 500 + static_cast<std::uint64_t>(n));
        CHECK(success_probability(q, single_shot(q, optimal_phi(q))) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("single shot matches one unitary step at phi = theta") {
    const SearchProblem p(4, {5});
    const StateVector deformed = single_shot(p, grover_angles(p).theta);
    const StateVector unitary = grover_iterate(p, 1);
    for (std::uint64_t i = 0; i < 16; ++i) {
        CHECK(std::abs(deformed.amps[i] - unitary.amps[i]) < 1e-10);
    }
}

TEST_CASE("single shot closed form at phi = 2 theta") {
    const SearchProblem p(4, {5});
    const StateVector out = single_shot(p, 2.0 * grover_angles(p).theta);
    // sin^2(theta/2 + 2 theta) with sin(theta/2) = 1/4; exactly (61/64)^2
    CHECK(success_probability(p, out) == doctest::Approx(0.908447265625).epsilon(1e-10));
}

TEST_CASE("single shot lands on the closed-form rotation for random angles") {
    SplitMix64 rng = substream(23, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 9);  // up to 10
        const SearchProblem p =
            random_half_space_problem(n, 600 + static_cast<std::uint64_t>(trial));
        const double phi = 1e-3 + (std::numbers::pi / 2.0 - 2e-3) * rng.uniform01();
        const StateVector out = single_shot(p, phi);

        const double angle = grover_angles(p).half_theta + phi;
        const auto [alpha, beta] = alpha_beta(p);
        CHECK(std::abs(inner_product(alpha, out) - Complex{std::cos(angle), 0.0}) < 1e-10);
        CHECK(std::abs(inner_product(beta, out) - Complex{std::sin(angle), 0.0}) < 1e-10);
        CHECK(std::abs(out.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("overlap identity sums") {
    SUBCASE("N=4, M=1") {
        const OverlapSums sums = basis_identity_sums(SearchProblem(2, {3}));
        CHECK(sums.alpha_alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(sums.beta_beta == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(sums.cross == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("N=16, M=4 gives the same angles") {
        const OverlapSums sums = basis_identity_sums(SearchProblem(4, {1, 6, 11, 12}));
        CHECK(sums.alpha_alpha == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        CHECK(sums.beta_beta == doctest::Approx(3.0).epsilon(1e-10));
        CHECK(sums.cross == doctest::Approx(-1.0).epsilon(1e-10));
    }

    SUBCASE("closed forms for random problems") {
        for (int n = 3; n <= 8; ++n) {
            const SearchProblem p =
                random_half_space_problem(n, 700 + static_cast<std::uint64_t>(n));
            const double tan_half = std::tan(grover_angles(p).half_theta);
            const OverlapSums sums = basis_identity_sums(p);
            CHECK(std::abs(sums.alpha_alpha - tan_half * tan_half) < 1e-9);
            CHECK(std::abs(sums.beta_beta - 1.0 / (tan_half * tan_half)) < 1e-9);
            CHECK(std::abs(sums.cross + 1.0) < 1e-9);
        }
    }

    SUBCASE("size guard") {
        CHECK_THROWS_AS(basis_identity_sums(SearchProblem(13, {5})), OracleSizeExceeded);
    }
}

TEST_CASE("singular value split") {
    const SearchProblem p(4, {5});

    SUBCASE("phi = theta gives unit magnitudes and the sign pattern") {
        const SvdFactors f = svd_factor(metric_params(p, grover_angles(p).theta));
        CHECK(f.d_prime[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.v_signs[0] == 1);
        for (std::size_t i = 1; i < 16; ++i) {
            CHECK(f.d_prime[i] == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(f.v_signs[i] == -1);
        }
    }

    SUBCASE("optimal angle magnitudes") {
        const SvdFactors f = svd_factor(metric_params(p, optimal_phi(p)));
        CHECK(f.d_prime[0] == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
        for (std::size_t i = 1; i < 16; ++i) {
            CHECK(f.d_prime[i] == doctest::Approx(2.0).epsilon(1e-12));
        }
    }

    SUBCASE("factors reconstruct the diagonal exactly") {
        SplitMix64 rng = substream(29, 2);
        for (int trial = 0; trial < 10; ++trial) {
            const double phi = 1e-2 + (std::numbers::pi / 2.0 - 2e-2) * rng.uniform01();
            const MetricDiagonal m = metric_params(p, phi);
            const SvdFactors f = svd_factor(m);
            const std::vector<double> diag = m.diagonal();
            for (std::size_t i = 0; i < diag.size(); ++i) {
                CHECK(f.d_prime[i] * f.v_signs[i] == diag[i]);
                CHECK(f.d_prime[i] >= 0.0);
            }
        }
    }
}

TEST_CASE("spectral norm exceeds one in the advantage regime") {
    const SearchProblem p(5, {11});
    const double theta = grover_angles(p).theta;
    SplitMix64 rng = substream(41, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const double phi = theta + (std::numbers::pi / 2.0 - theta - 1e-9) * rng.uniform01();
        if (phi <= theta) continue;
        const MetricDiagonal m = metric_params(p, phi);
        CHECK(m.spectral_norm() == doctest::Approx(m.lam).epsilon(1e-12));
        CHECK(m.lam > 1.0);
    }
}

}  // TEST_SUITE
