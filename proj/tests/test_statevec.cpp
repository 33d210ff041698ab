#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "oracles.hpp"
#include "qsearch/dense.hpp"
#include "qsearch/errors.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/rng.hpp"
#include "qsearch/statevector.hpp"

using namespace qsearch;

namespace {

StateVector random_state(int n, std::uint64_t seed) {
    SplitMix64 rng = substream(seed, 0);
    std::vector<Complex> amps(std::uint64_t{1} << n);
    for (Complex& a : amps) a = Complex{rng.uniform01() - 0.5, rng.uniform01() - 0.5};
    StateVector s(n, std::move(amps));
    const double scale = 1.0 / s.norm();
    for (Complex& a : s.amps) a *= scale;
    return s;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    }
    return worst;
}

}  // namespace

TEST_SUITE("statevec") {

TEST_CASE("uniform state") {
    const StateVector one = uniform_state(1);
    CHECK(one.amps[0].real() == doctest::Approx(0.70710678).epsilon(1e-8));
    CHECK(one.amps[1].real() == doctest::Approx(0.70710678).epsilon(1e-8));

    const StateVector two = uniform_state(2);
    for (const Complex& a : two.amps) CHECK(std::abs(a - Complex{0.5, 0.0}) < 1e-12);

    const StateVector ten = uniform_state(10);
    for (const Complex& a : ten.amps) CHECK(std::abs(a - Complex{0.03125, 0.0}) < 1e-15);
    CHECK(std::abs(ten.norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(uniform_state(0), InvalidArgument);
    CHECK_THROWS_AS(uniform_state(25), InvalidArgument);
}

TEST_CASE("register construction guards") {
    CHECK_THROWS_AS(StateVector(2, std::vector<Complex>(3)), DimensionMismatch);
    CHECK_THROWS_AS(StateVector(0, std::vector<Complex>(1)), InvalidArgument);
    CHECK_THROWS_AS(basis_state(3, 8), IndexOutOfRange);
}

TEST_CASE("fwht single qubit") {
    const StateVector h0 = fwht(basis_state(1, 0));
    CHECK(std::abs(h0.amps[0] - Complex{0.70710678118, 0.0}) < 1e-10);
    CHECK(std::abs(h0.amps[1] - Complex{0.70710678118, 0.0}) < 1e-10);

    StateVector minus(1, {Complex{0.70710678118654752, 0.0}, Complex{-0.70710678118654752, 0.0}});
    const StateVector one = fwht(std::move(minus));
    CHECK(std::abs(one.amps[0]) < 1e-12);
    CHECK(std::abs(one.amps[1] - Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("fwht of |3> carries the parity signs") {
    // evaluate sign(3.m)/2 directly for m = 0..3
    const StateVector out = fwht(basis_state(2, 3));
    for (std::uint64_t m = 0; m < 4; ++m) {
        const double expected = oracles::walsh_sign(3, m) * 0.5;
        CHECK(std::abs(out.amps[m] - Complex{expected, 0.0}) < 1e-12);
    }
}

TEST_CASE("fwht is a norm-preserving involution") {
    for (int n : {1, 3, 6, 9, 12}) {
        const StateVector s = random_state(n, 100 + static_cast<std::uint64_t>(n));
        const StateVector once = fwht(s);
        CHECK(std::abs(once.norm() - 1.0) < 1e-12);
        const StateVector twice = fwht(once);
        CHECK(max_abs_diff(twice, s) < 1e-10);
    }
}

TEST_CASE("serial and parallel kernels agree bitwise") {
    // 18 sits above the dispatch cutoff, so the wrapper path is covered too
    for (int n : {4, 10, 15, 18}) {
        StateVector a = random_state(n, 55);
        StateVector b = a;
        StateVector c = a;
        kernels::fwht_serial(a.amps);
        kernels::fwht_parallel(b.amps);
        kernels::fwht(c.amps);
        CHECK(max_abs_diff(a, b) == 0.0);
        CHECK(max_abs_diff(a, c) == 0.0);

        kernels::scale_two_level_serial(a.amps, 0.25, -1.5);
        kernels::scale_two_level_parallel(b.amps, 0.25, -1.5);
        CHECK(max_abs_diff(a, b) == 0.0);
    }
}

TEST_CASE("apply_diagonal") {
    const StateVector u = uniform_state(2);

    const std::vector<Complex> ones(4, Complex{1.0, 0.0});
    CHECK(max_abs_diff(apply_diagonal(u, ones), u) == 0.0);

    const std::vector<Complex> signs = {{1, 0}, {-1, 0}, {-1, 0}, {-1, 0}};
    const StateVector flipped = apply_diagonal(u, signs);
    CHECK(std::abs(flipped.amps[0] - Complex{0.5, 0.0}) < 1e-15);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(flipped.amps[i] - Complex{-0.5, 0.0}) < 1e-15);

    // projector-style diagonal leaves an unnormalized register on purpose
    const std::vector<Complex> projector = {{2, 0}, {0, 0}, {0, 0}, {0, 0}};
    const StateVector projected = apply_diagonal(u, projector);
    CHECK(std::abs(projected.amps[0] - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(projected.squared_norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(apply_diagonal(u, std::vector<Complex>(3)), DimensionMismatch);
}

TEST_CASE("unimodular diagonals preserve the norm") {
    SplitMix64 rng = substream(7, 3);
    for (int n : {2, 5, 8}) {
        const StateVector s = random_state(n, 200 + static_cast<std::uint64_t>(n));
        std::vector<Complex> diag(s.size());
        for (Complex& d : diag) {
            const double angle = rng.uniform01() * 6.283185307179586;
            d = Complex{std::cos(angle), std::sin(angle)};
        }
        CHECK(std::abs(apply_diagonal(s, diag).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("inner products") {
    CHECK(std::abs(inner_product(uniform_state(3), uniform_state(3)) - Complex{1.0, 0.0}) <
          1e-12);
    CHECK(std::abs(inner_product(basis_state(1, 0), fwht(basis_state(1, 0))) -
                   Complex{0.70710678118, 0.0}) < 1e-10);
    CHECK_THROWS_AS(inner_product(uniform_state(2), uniform_state(3)), DimensionMismatch);
}

TEST_CASE("dense materialization") {
    const auto identity = [](StateVector s) { return s; };
    const DenseMatrix eye = dense_from_columns(identity, 2);
    CHECK((eye - DenseMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

    const DenseMatrix h = dense_from_columns([](StateVector s) { return fwht(std::move(s)); }, 2);
    const double r = 0.70710678118654752;
    CHECK(std::abs(h(0, 0) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(h(0, 1) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(h(1, 0) - Complex{r, 0}) < 1e-12);
    CHECK(std::abs(h(1, 1) - Complex{-r, 0}) < 1e-12);

    // diffusion columns follow the 2/N - delta pattern
    const DenseMatrix d =
        dense_from_columns([](StateVector s) { return apply_diffusion(std::move(s)); }, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double expected = (i == j) ? -0.5 : 0.5;
            CHECK(std::abs(d(i, j) - Complex{expected, 0.0}) < 1e-12);
        }
    }

    CHECK_THROWS_AS(dense_from_columns(identity, 8192), OracleSizeExceeded);
}

TEST_CASE("dense fwht equals the explicit parity matrix") {
    for (int n = 1; n <= 6; ++n) {
        const DenseMatrix lhs = dense_from_columns(
            [](StateVector s) { return fwht(std::move(s)); }, std::int64_t{1} << n);
        CHECK((lhs - oracles::walsh_matrix(n)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

}  // TEST_SUITE
