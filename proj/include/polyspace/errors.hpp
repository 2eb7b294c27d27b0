#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  NonGeneric,
  DegreeMismatch,
  ParityViolation,
  Range,
  Capacity,
  EvenM,
  EngineMismatch,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure in the library surfaces as an Error carrying its kind; the C
/// API maps the kind one-to-one onto a status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polyspace
