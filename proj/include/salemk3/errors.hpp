#pragma once

#include <stdexcept>
#include <string>

namespace salemk3 {

// Error taxonomy maps onto the CLI exit-code contract:
// precondition failures exit 1, internal consistency failures exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct ConsistencyError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};
// Raised when a pairing vector has no integral solution in the lattice.
struct NotInLatticeError : Error {
    using Error::Error;
};

}  // namespace salemk3
