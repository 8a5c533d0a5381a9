#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qu2 {

// Precondition of a mathematical operation violated (non-unitary input, offset out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed user input. position is a byte offset into the offending text when known.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what, std::size_t position = npos)
      : std::invalid_argument(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Request exceeds what the engine will attempt (e.g. brute force beyond level 3).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qu2
