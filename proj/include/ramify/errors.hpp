#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramify {

enum class ErrorKind {
    PrecisionLoss,
    NotFiniteLength,
    NotEisenstein,
    DegreeOne,
    NotGalois,
    NotIsolated,
    NotStabilized,
    NotEquivariant,
    NotFree,
    TriangularIdentityFailed,
    InvalidArgument,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::PrecisionLoss: return "PrecisionLoss";
        case ErrorKind::NotFiniteLength: return "NotFiniteLength";
        case ErrorKind::NotEisenstein: return "NotEisenstein";
        case ErrorKind::DegreeOne: return "DegreeOne";
        case ErrorKind::NotGalois: return "NotGalois";
        case ErrorKind::NotIsolated: return "NotIsolated";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::NotEquivariant: return "NotEquivariant";
        case ErrorKind::NotFree: return "NotFree";
        case ErrorKind::TriangularIdentityFailed: return "TriangularIdentityFailed";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to a stable exit code.
class RamifyError : public std::runtime_error {
public:
    RamifyError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw RamifyError(kind, what);
}

}  // namespace ramify
