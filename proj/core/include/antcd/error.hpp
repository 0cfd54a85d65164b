#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antcd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised by metric and detection entry points when 2m == 0.
class NoEdgesError : public Error {
 public:
  NoEdgesError() : Error("no edges") {}
};

/// Out-of-range algorithm or generator parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid vertex/community ids, mismatched vertex sets, bad map chains.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace antcd
