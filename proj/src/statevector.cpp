#include "qsearch/statevector.hpp"

#include <cmath>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n(n_qubits), amps(std::move(amplitudes)) {
    if (n < 1 || n > kMaxQubits + 1) {
        throw InvalidArgument("qubit count " + std::to_string(n) + " out of range [1, " +
                              std::to_string(kMaxQubits + 1) + "]");
    }
    if (amps.size() != (std::uint64_t{1} << n)) {
        throw DimensionMismatch("amplitude array length " + std::to_string(amps.size()) +
                                " does not match 2^" + std::to_string(n));
    }
}

double StateVector::squared_norm() const {
    return kernels::squared_norm(amps);
}

double StateVector::norm() const {
    return std::sqrt(squared_norm());
}

StateVector uniform_state(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw InvalidArgument("qubit count " + std::to_string(n) + " out of range [1, " +
                              std::to_string(kMaxQubits) + "]");
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(size));
    return StateVector(n, std::vector<Complex>(size, Complex{amp, 0.0}));
}

StateVector basis_state(int n, std::uint64_t index) {
    if (n < 1 || n > kMaxQubits + 1) {
        throw InvalidArgument("qubit count " + std::to_string(n) + " out of range");
    }
    const std::uint64_t size = std::uint64_t{1} << n;
    if (index >= size) {
        throw IndexOutOfRange("basis index " + std::to_string(index) + " >= " +
                              std::to_string(size));
    }
    std::vector<Complex> amps(size, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return StateVector(n, std::move(amps));
}

StateVector fwht(StateVector s) {
    kernels::fwht(s.amps);
    return s;
}

StateVector apply_diagonal(StateVector s, std::span<const Complex> diag) {
    if (diag.size() != s.size()) {
        throw DimensionMismatch("diagonal length " + std::to_string(diag.size()) +
                                " does not match register size " + std::to_string(s.size()));
    }
    kernels::scale(s.amps, diag);
    return s;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) {
        throw DimensionMismatch("inner product between registers of " + std::to_string(a.n) +
                                " and " + std::to_string(b.n) + " qubits");
    }
    return kernels::dot_conjugated(a.amps, b.amps);
}

}  // namespace qsearch
