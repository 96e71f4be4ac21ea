#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace litf {

// Caller misuse: arity mismatch, unknown element, out-of-range index.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates a mathematical precondition
// (not an up-set, not a closure system, not isotone, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds an enforced size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace litf
