#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptl {

enum class ErrorKind {
    InvalidArgument,
    NonParitySymmetric,
    BadLength,
    NegativeAmplitude,
    CenterImpurity,
    DimensionMismatch,
    NotDecomposable,
    NoConvergence,
    ZeroVector,
    OutOfRegime,
    ParseError,
    ValidationError,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Numerical failures map to exit status 2 in the CLI; everything else is a
/// caller/configuration error.
bool is_numerical(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ptl
