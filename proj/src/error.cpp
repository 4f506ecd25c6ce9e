#include "hurwitz/error.hpp"

namespace seqalg {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::FactorialNotInvertible: return "FactorialNotInvertible";
    case ErrorKind::RetractFailed: return "RetractFailed";
    case ErrorKind::LengthTooShort: return "LengthTooShort";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotZeroOfOrderOne: return "NotZeroOfOrderOne";
    case ErrorKind::NotInvertibleForComposition: return "NotInvertibleForComposition";
    case ErrorKind::NotUnitHeaded: return "NotUnitHeaded";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotBinomialType: return "NotBinomialType";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NetworkDisabled: return "NetworkDisabled";
    case ErrorKind::HttpError: return "HttpError";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    }
    return "Unknown";
}

bool is_usage_error(ErrorKind kind) noexcept
{
    return kind == ErrorKind::ParseError || kind == ErrorKind::InvalidRing || kind == ErrorKind::NetworkDisabled;
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail)
{
}

}  // namespace seqalg
