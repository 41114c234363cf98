#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pps {

enum class ErrorKind {
  DuplicateName,
  UnknownVertex,
  UnknownArrow,
  CapTooSmall,
  CapExceeded,
  MalformedEntry,
  InvalidSystem,
  NotPathCategory,
  DegreeMismatch,
  DegreeOrder,
  NotInvariant,
  InvalidIdealSpec,
  TooManyVertices,
  HorizonTooSmall,
  NotExtendable,
  ParseError,
  SemanticError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pps
