#pragma once

#include <stdexcept>
#include <string>

namespace contact_tori {

// Maps onto CLI exit codes: invalid input -> 2, capacity -> 3.
enum class ErrorKind { invalid_input, capacity };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::invalid_input, what) {}
};

class CapacityExceeded : public Error {
 public:
  explicit CapacityExceeded(const std::string& what)
      : Error(ErrorKind::capacity, what) {}
};

}  // namespace contact_tori
