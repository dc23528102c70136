#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lpm {

enum class ErrorKind {
  EmptyPath,
  IllegalCharacter,
  LengthMismatch,
  EndpointMismatch,
  LowerAboveUpper,
  MalformedRational,
  RegionTooLarge,
  DimensionTooLarge,
  DimensionMismatch,
  EmptyCircuit,
  MalformedPolynomial,
};

const char* to_string(ErrorKind kind);

/// True for errors caused by bad user input (CLI exit code 2).
bool is_validation_error(ErrorKind kind);

/// Error raised by every module. `name()` renders the kind with its
/// optional argument, e.g. "LowerAboveUpper(1)" or "EmptyPath".
class LpmError : public std::runtime_error {
 public:
  LpmError(ErrorKind kind, std::string detail = {},
           std::optional<std::size_t> argument = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> argument() const noexcept { return argument_; }
  std::string name() const;

 private:
  ErrorKind kind_;
  std::optional<std::size_t> argument_;
};

}  // namespace lpm
