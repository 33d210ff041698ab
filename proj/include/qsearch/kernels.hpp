#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qsearch::kernels {

using Complex = std::complex<double>;

// Below this many amplitudes the dispatching kernels take the serial path;
// thread fan-out costs more than the work it saves on small registers.
// Crossover measured with benchmarks/bench_kernels.
inline constexpr std::size_t kParallelCutoff = std::size_t{1} << 17;

// In-place Walsh-Hadamard butterflies with 1/sqrt(2) folded into every pass,
// so the transform is orthogonal and intermediates keep their norm.
// a.size() must be a power of two.
//
// The parallel variant performs arithmetic identical to the serial one, lane
// by lane, so results are bitwise equal for any thread count. The serial
// version is the reference the tests and the benchmark measure against.
void fwht_serial(std::span<Complex> a);
void fwht_parallel(std::span<Complex> a);
void fwht(std::span<Complex> a);

// a[i] *= d[i]
void scale_serial(std::span<Complex> a, std::span<const Complex> d);
void scale_parallel(std::span<Complex> a, std::span<const Complex> d);
void scale(std::span<Complex> a, std::span<const Complex> d);

// a[0] *= first, a[i>0] *= rest; the two-level diagonals used throughout
// never get materialized as length-N arrays on the hot path.
void scale_two_level_serial(std::span<Complex> a, double first, double rest);
void scale_two_level_parallel(std::span<Complex> a, double first, double rest);
void scale_two_level(std::span<Complex> a, double first, double rest);

// Reductions stay serial: a fixed summation order keeps every result
// independent of the number of threads.
double squared_norm(std::span<const Complex> a);
Complex dot_conjugated(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace qsearch::kernels
