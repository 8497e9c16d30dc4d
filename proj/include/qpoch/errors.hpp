#ifndef QPOCH_ERRORS_HPP
#define QPOCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpoch {

// Caller violated a precondition (order mismatch, index past the order,
// malformed numeral, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured resource budget. Never
// recovered from by silently truncating.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t required_bytes)
      : std::runtime_error(what), required_bytes_(required_bytes) {}

  std::size_t required_bytes() const noexcept { return required_bytes_; }

 private:
  std::size_t required_bytes_;
};

// Two computation paths that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested a Bloch-Polya correction polynomial for a k where none exists.
class NoCorrectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qpoch

#endif  // QPOCH_ERRORS_HPP
