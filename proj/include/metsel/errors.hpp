#pragma once

#include <stdexcept>
#include <string>

namespace metsel {

// Shape/dimension mismatch between operands.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape error: " + msg) {}
};

// Violated call contract (non-scalar backward root, epochs < 1, ...).
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error("contract error: " + msg) {}
};

// Malformed dataset or config file; carries file and line context where known.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error("parse error: " + msg) {}
};

// Class moments cannot be formed (empty class, too few train nodes).
struct MomentError : std::runtime_error {
    explicit MomentError(const std::string& msg) : std::runtime_error("moment error: " + msg) {}
};

// Non-finite values or failed factorization.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error("numerical error: " + msg) {}
};

// Invalid split request or a class missing from a train mask.
struct SplitError : std::runtime_error {
    explicit SplitError(const std::string& msg) : std::runtime_error("split error: " + msg) {}
};

} // namespace metsel
