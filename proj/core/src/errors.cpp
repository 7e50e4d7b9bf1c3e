#include "ptlattice/errors.hpp"

namespace ptl {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonParitySymmetric: return "NonParitySymmetric";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::NegativeAmplitude: return "NegativeAmplitude";
    case ErrorKind::CenterImpurity: return "CenterImpurity";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::OutOfRegime: return "OutOfRegime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_numerical(ErrorKind kind) noexcept
{
    return kind == ErrorKind::NoConvergence;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

} // namespace ptl
