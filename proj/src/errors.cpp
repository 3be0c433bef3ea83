#include "quadfib/errors.hpp"

namespace quadfib {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::PerfectSquare: return "PerfectSquare";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroExponent: return "ZeroExponent";
    case ErrorCode::ZeroIrrationalPart: return "ZeroIrrationalPart";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NonPositiveIndex: return "NonPositiveIndex";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::OutsideRadius: return "OutsideRadius";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::NetworkError: return "NetworkError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CacheMiss: return "CacheMiss";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace quadfib
