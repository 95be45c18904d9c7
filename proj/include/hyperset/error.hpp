#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (NWF generator, bad phase, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured desk-scale bound was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperset
