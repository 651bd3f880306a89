#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wnsynth {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class EncodingError : public ParseError {
public:
  using ParseError::ParseError;
};

/// Well-formed input that violates a data invariant (duplicate keys, mixed languages).
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// A provider was asked for a language pair it does not serve.
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// Transport-level provider failure. Retryable; distinct from "no translation".
class ProviderError : public Error {
public:
  using Error::Error;
};

class CacheError : public Error {
public:
  using Error::Error;
};

class ValidationError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace wnsynth
