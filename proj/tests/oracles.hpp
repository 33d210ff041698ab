// Brute-force reference routes used only by the tests. Everything here is
// written the slow, obviously-correct way and stays independent of the
// library's transform kernels.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

inline int walsh_sign(std::uint64_t ell, std::uint64_t m) {
    return (std::popcount(ell & m) & 1) ? -1 : 1;
}

// the explicit (+-1)/sqrt(N) transform matrix, entry (l, m) = sign(l.m)/sqrt(N)
inline Eigen::MatrixXcd walsh_matrix(int n) {
    const std::int64_t dim = std::int64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::MatrixXcd h(dim, dim);
    for (std::int64_t l = 0; l < dim; ++l) {
        for (std::int64_t m = 0; m < dim; ++m) {
            h(l, m) = walsh_sign(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(m)) *
                      scale;
        }
    }
    return h;
}

// trigonometric route for first-kind Chebyshev values on [-1, 1]; the library
// uses the recurrence, so the two routes are independent
inline double chebyshev_trig(double x, int degree) {
    if (x > 1.0) x = 1.0;
    if (x < -1.0) x = -1.0;
    return std::cos(degree * std::acos(x));
}

inline double binomial_sigma(double p, double shots) {
    return std::sqrt(p * (1.0 - p) / shots);
}

}  // namespace oracles
