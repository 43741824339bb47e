#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vkt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed extended Gauss code or JSON input; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Syntactically fine but violates a diagram invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a quantum function or recoupling formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// State sum would exceed the configured crossing budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace vkt
