// Timing harness for the register kernels: serial reference vs the OpenMP
// variants, one row per size. Also asserts the two paths agree bitwise, which
// is the contract the dispatching wrappers rely on.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsearch/kernels.hpp"
#include "qsearch/rng.hpp"

using qsearch::kernels::Complex;

namespace {

std::vector<Complex> random_register(int n, std::uint64_t seed) {
    qsearch::SplitMix64 rng = qsearch::substream(seed, 0);
    std::vector<Complex> amps(std::size_t{1} << n);
    for (Complex& a : amps) a = Complex{rng.uniform01() - 0.5, rng.uniform01() - 0.5};
    return amps;
}

template <typename F>
double best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        body();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

bool bitwise_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    int n_min = 14;
    int n_max = 22;
    if (argc >= 2) n_min = std::atoi(argv[1]);
    if (argc >= 3) n_max = std::atoi(argv[2]);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-4s %-10s %12s %12s %9s %12s %12s %9s\n", "n", "amps", "fwht_ser",
                "fwht_par", "speedup", "scale_ser", "scale_par", "speedup");

    for (int n = n_min; n <= n_max; ++n) {
        const std::vector<Complex> base = random_register(n, 42);

        std::vector<Complex> serial = base;
        std::vector<Complex> parallel = base;
        const double t_fwht_s = best_of(3, [&] {
            serial = base;
            qsearch::kernels::fwht_serial(serial);
        });
        const double t_fwht_p = best_of(3, [&] {
            parallel = base;
            qsearch::kernels::fwht_parallel(parallel);
        });
        if (!bitwise_equal(serial, parallel)) {
            std::fprintf(stderr, "FATAL: fwht serial/parallel mismatch at n=%d\n", n);
            return 1;
        }

        const double t_scale_s = best_of(3, [&] {
            serial = base;
            qsearch::kernels::scale_two_level_serial(serial, 0.5, -1.25);
        });
        const double t_scale_p = best_of(3, [&] {
            parallel = base;
            qsearch::kernels::scale_two_level_parallel(parallel, 0.5, -1.25);
        });
        if (!bitwise_equal(serial, parallel)) {
            std::fprintf(stderr, "FATAL: scale serial/parallel mismatch at n=%d\n", n);
            return 1;
        }

        std::printf("%-4d %-10zu %10.3fms %10.3fms %8.2fx %10.3fms %10.3fms %8.2fx\n", n,
                    base.size(), t_fwht_s * 1e3, t_fwht_p * 1e3, t_fwht_s / t_fwht_p,
                    t_scale_s * 1e3, t_scale_p * 1e3, t_scale_s / t_scale_p);
    }
    return 0;
}
