#include "qsearch/kernels.hpp"

namespace qsearch::kernels {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

void fwht_serial(std::span<Complex> a) {
    const std::size_t n = a.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex x = a[j];
                const Complex y = a[j + h];
                a[j] = (x + y) * kInvSqrt2;
                a[j + h] = (x - y) * kInvSqrt2;
            }
        }
    }
}

void fwht_parallel(std::span<Complex> a) {
    const std::size_t n = a.size();
    const auto pairs = static_cast<std::int64_t>(n / 2);
    for (std::size_t h = 1; h < n; h <<= 1) {
        const std::size_t low = h - 1;
        // pair p owns exactly the lanes (j, j+h); arithmetic is identical to
        // the serial pass, so results are bitwise equal for any thread count
#pragma omp parallel for schedule(static)
        for (std::int64_t p = 0; p < pairs; ++p) {
            const auto u = static_cast<std::size_t>(p);
            const std::size_t j = ((u & ~low) << 1) | (u & low);
            const Complex x = a[j];
            const Complex y = a[j + h];
            a[j] = (x + y) * kInvSqrt2;
            a[j + h] = (x - y) * kInvSqrt2;
        }
    }
}

void fwht(std::span<Complex> a) {
    if (a.size() >= kParallelCutoff) {
        fwht_parallel(a);
    } else {
        fwht_serial(a);
    }
}

void scale_serial(std::span<Complex> a, std::span<const Complex> d) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= d[i];
}

void scale_parallel(std::span<Complex> a, std::span<const Complex> d) {
    const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] *= d[static_cast<std::size_t>(i)];
    }
}

void scale(std::span<Complex> a, std::span<const Complex> d) {
    if (a.size() >= kParallelCutoff) {
        scale_parallel(a, d);
    } else {
        scale_serial(a, d);
    }
}

void scale_two_level_serial(std::span<Complex> a, double first, double rest) {
    if (a.empty()) return;
    a[0] *= first;
    for (std::size_t i = 1; i < a.size(); ++i) a[i] *= rest;
}

void scale_two_level_parallel(std::span<Complex> a, double first, double rest) {
    if (a.empty()) return;
    a[0] *= first;
    const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 1; i < n; ++i) {
        a[static_cast<std::size_t>(i)] *= rest;
    }
}

void scale_two_level(std::span<Complex> a, double first, double rest) {
    if (a.size() >= kParallelCutoff) {
        scale_two_level_parallel(a, first, rest);
    } else {
        scale_two_level_serial(a, first, rest);
    }
}

double squared_norm(std::span<const Complex> a) {
    double acc = 0.0;
    for (const Complex& c : a) acc += std::norm(c);
    return acc;
}

Complex dot_conjugated(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace qsearch::kernels
