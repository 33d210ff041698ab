#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

#include "qsearch/statevector.hpp"

namespace qsearch {

using DenseMatrix = Eigen::MatrixXcd;

// Guard against accidentally materializing a large operator; 4096 x 4096
// complex doubles is the biggest matrix the brute-force route will build.
inline constexpr std::int64_t kMaxOracleDim = 4096;

// Materializes an operator column by column: column j is apply(|j>).
// Deliberately brute force; this is the substrate the rest of the suite
// verifies itself against. dim must be a power of two <= kMaxOracleDim.
DenseMatrix dense_from_columns(const std::function<StateVector(StateVector)>& apply,
                               std::int64_t dim);

// plain repeated multiplication, exponent >= 0
DenseMatrix dense_power(const DenseMatrix& base, int exponent);

Eigen::VectorXcd to_eigen(const StateVector& s);
StateVector from_eigen(int n, const Eigen::VectorXcd& v);

}  // namespace qsearch
