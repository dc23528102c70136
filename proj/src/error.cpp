#include "lpmtutte/error.hpp"

namespace lpm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyPath: return "EmptyPath";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::LowerAboveUpper: return "LowerAboveUpper";
    case ErrorKind::MalformedRational: return "MalformedRational";
    case ErrorKind::RegionTooLarge: return "RegionTooLarge";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyCircuit: return "EmptyCircuit";
    case ErrorKind::MalformedPolynomial: return "MalformedPolynomial";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyPath:
    case ErrorKind::IllegalCharacter:
    case ErrorKind::LengthMismatch:
    case ErrorKind::EndpointMismatch:
    case ErrorKind::LowerAboveUpper:
    case ErrorKind::MalformedRational:
    case ErrorKind::MalformedPolynomial:
      return true;
    default:
      return false;
  }
}

LpmError::LpmError(ErrorKind kind, std::string detail,
                   std::optional<std::size_t> argument)
    : std::runtime_error(detail.empty() ? std::string(to_string(kind))
                                        : std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      argument_(argument) {}

std::string LpmError::name() const {
  std::string out = to_string(kind_);
  if (argument_) out += "(" + std::to_string(*argument_) + ")";
  return out;
}

}  // namespace lpm
