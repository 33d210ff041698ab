#pragma once

#include <stdexcept>

namespace qsearch {

// Typed failures raised by library operations. Everything derives from Error
// so the CLI boundary can catch the whole family and map it to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct OracleSizeExceeded : Error { using Error::Error; };
struct InvalidProblem : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct MetricDegenerate : Error { using Error::Error; };
struct PhiOutOfRange : Error { using Error::Error; };
struct BranchImpossible : Error { using Error::Error; };
struct TargetUnreachable : Error { using Error::Error; };

}  // namespace qsearch
