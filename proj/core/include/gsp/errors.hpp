#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid data or parameters: asymmetric weights, out-of-range scale
/// indices, dimension mismatches, bad option values.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content. `line()` is 1-based when known, 0 otherwise.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg, int line = 0)
      : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Network failure. `status()` is the HTTP status when one was received,
/// 0 for connection-level failures.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& msg, int status = 0)
      : Error(msg), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace gsp
