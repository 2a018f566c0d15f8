#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobenius {

// A violated mathematical precondition: gcd(A) != 1, a == b, gap-free input
// where a degree is needed, and so on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-width arithmetic or a configured size cap would be exceeded.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed textual input. `column` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace frobenius
