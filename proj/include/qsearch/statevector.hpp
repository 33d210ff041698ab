#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qsearch/kernels.hpp"

namespace qsearch {

using Complex = std::complex<double>;

// 2^24 amplitudes (256 MiB) is the desk-scale ceiling for registers.
inline constexpr int kMaxQubits = 24;

// Dense register of 2^n complex amplitudes. Unitary operations keep the
// 2-norm at 1 within 1e-10; the deliberately non-unitary appliers say so at
// their declaration and may return unnormalized vectors.
struct StateVector {
    int n = 0;
    std::vector<Complex> amps;

    StateVector() = default;
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    std::uint64_t size() const { return amps.size(); }
    double squared_norm() const;
    double norm() const;
};

// |psi> with every amplitude 1/sqrt(N); 1 <= n <= kMaxQubits.
StateVector uniform_state(int n);

// computational basis vector |index>
StateVector basis_state(int n, std::uint64_t index);

// H applied to every qubit, O(N log N) butterfly passes; norm preserving.
StateVector fwht(StateVector s);

// amps[i] *= diag[i]; the output is unnormalized whenever diag is not
// unimodular.
StateVector apply_diagonal(StateVector s, std::span<const Complex> diag);

// <a|b> with conjugation on the first argument
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace qsearch
