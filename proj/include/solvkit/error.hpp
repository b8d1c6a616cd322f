#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group files, group specs). Carries the 0-based
/// character offset at which parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (closure, lattice, naive) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the hypotheses of a closed-form result or table.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A mandatory post-check failed; indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace solvkit
