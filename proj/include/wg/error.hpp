#pragma once

#include <stdexcept>
#include <string>

namespace wg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical relation that must hold was found to be violated
/// (non-group table, non-orthogonal character table, indicator out of range).
class MathViolation : public Error {
 public:
  using Error::Error;
};

/// Bad arguments to an operation (weight mismatch, non-strict partition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, long long limit, long long requested)
      : Error("cap '" + cap_name + "' exceeded: requested " + std::to_string(requested) +
              ", limit " + std::to_string(limit)),
        cap_(std::move(cap_name)) {}

  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

}  // namespace wg
