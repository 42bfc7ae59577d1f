#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commop {

enum class ErrorKind {
  parse,
  invalid_argument,
  division_by_zero,
  unbound_parameter,
  x_dependence,
  nonlinear,
};

// Every failure raised by the library. The C API maps kinds onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::parse,
              "at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace commop
