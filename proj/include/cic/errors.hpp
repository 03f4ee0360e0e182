#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cic {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A CicConfig field is out of range. field() names it ("stages", "rate", ...).
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Requested register width cannot hold the filter output losslessly.
class WidthError : public Error {
 public:
  using Error::Error;
};

// A sample or frequency lies outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad design parameter (e.g. an even compensator tap count).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Pin-level misuse of the chip model.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cic
