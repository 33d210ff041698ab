#include "qsearch/dense.hpp"

#include <bit>
#include <string>

#include "qsearch/errors.hpp"

namespace qsearch {

DenseMatrix dense_from_columns(const std::function<StateVector(StateVector)>& apply,
                               std::int64_t dim) {
    if (dim < 2 || dim > kMaxOracleDim) {
        throw OracleSizeExceeded("dense materialization of dim " + std::to_string(dim) +
                                 " exceeds limit " + std::to_string(kMaxOracleDim));
    }
    const auto udim = static_cast<std::uint64_t>(dim);
    if (!std::has_single_bit(udim)) {
        throw InvalidArgument("dense dimension must be a power of two");
    }
    const int n = std::countr_zero(udim);

    DenseMatrix out(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
        const StateVector col = apply(basis_state(n, static_cast<std::uint64_t>(j)));
        if (col.size() != udim) {
            throw DimensionMismatch("column map changed the register size");
        }
        for (std::int64_t i = 0; i < dim; ++i) {
            out(i, j) = col.amps[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

DenseMatrix dense_power(const DenseMatrix& base, int exponent) {
    if (exponent < 0) throw InvalidArgument("negative matrix exponent");
    DenseMatrix acc = DenseMatrix::Identity(base.rows(), base.cols());
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

Eigen::VectorXcd to_eigen(const StateVector& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = s.amps[static_cast<std::size_t>(i)];
    return v;
}

StateVector from_eigen(int n, const Eigen::VectorXcd& v) {
    std::vector<Complex> amps(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) amps[static_cast<std::size_t>(i)] = v(i);
    return StateVector(n, std::move(amps));
}

}  // namespace qsearch
