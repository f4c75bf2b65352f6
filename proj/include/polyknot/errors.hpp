#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyknot {

enum class ErrorKind {
  DomainError,
  DegenerateCrossing,
  NonRegular,
  ZCollision,
  SingularSystem,
  Unliftable,
  ExtraCrossings,
  BadInput,
  NotMonic,
  UnknownName,
  BadRange,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every recoverable failure raised by the library. The kind
/// tag is what the CLI serializes and maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input file; `field()` names the offending JSON member.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& message)
      : Error(ErrorKind::ParseError, message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace polyknot
