#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricity {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// codes; the Python module maps them onto exception classes.
enum class ErrorKind {
    Parse,
    DimensionMismatch,
    TrivialKernel,
    EmptyLocus,
    SizeGuard,
    ZeroPolynomial,
    VariableMismatch,
    DegenerateSlice,
    InvalidChoice,
    ZeroDynamics,
    InternalInconsistency,
    Precondition,
    SearchBudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

class ToricityError : public std::runtime_error {
public:
    ToricityError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace toricity
