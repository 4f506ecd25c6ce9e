#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqalg {

/// Every failure the library reports carries one of these kinds. The CLI maps
/// usage-like kinds to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
    RingMismatch,
    InvalidRing,
    NotAUnit,
    FactorialNotInvertible,
    RetractFailed,
    LengthTooShort,
    LengthMismatch,
    NotZeroOfOrderOne,
    NotInvertibleForComposition,
    NotUnitHeaded,
    NonzeroConstantTerm,
    IndexOutOfRange,
    NotBinomialType,
    ParseError,
    NetworkDisabled,
    HttpError,
    PrefixTooShort,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that signal malformed input rather than an algebraic failure.
bool is_usage_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace seqalg
