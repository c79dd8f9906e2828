#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace r3 {

enum class ErrorKind {
  SingularElement,
  NotImaginaryUnit,
  NotInCone,
  OutOfDomain,
  RealPoint,
  NotInvertibleAtPoint,
  NotOrthogonal,
  OnSingularSphere,
  PointOutsideContour,
  UnfactoredInput,
  NegativeRadicand,
};

std::string_view to_string(ErrorKind kind);

// Raised by library operations whose preconditions fail on a given input.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the text grammars. `position` is a byte offset into `input`.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::string input, std::size_t position)
      : std::runtime_error(message),
        message_(std::move(message)),
        input_(std::move(input)),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

  // Message followed by the input and a caret under the offending byte.
  std::string annotated() const;

 private:
  std::string message_;
  std::string input_;
  std::size_t position_;
};

}  // namespace r3
