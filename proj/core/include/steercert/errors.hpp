#pragma once

#include <stdexcept>

namespace steercert {

// Incompatible or oversized matrix/state dimensions.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (non-Hermitian, non-unitary,
// unnormalized weights, malformed record, ...).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar argument outside its allowed range.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace steercert
