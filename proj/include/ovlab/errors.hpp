#pragma once

#include <stdexcept>
#include <string>

namespace ovlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ThetaOutOfRange : public Error {
public:
  using Error::Error;
};

class QuadratureFailure : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class InsufficientSamples : public Error {
public:
  using Error::Error;
};

class TruncationNotConverged : public Error {
public:
  using Error::Error;
};

class InsufficientSignal : public Error {
public:
  using Error::Error;
};

class NonStandardFamily : public Error {
public:
  using Error::Error;
};

class EmptyLaw : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// Config-file schema violation, carrying the offending line and field.
class ConfigError : public Error {
public:
  ConfigError(std::string field, int line, const std::string& message)
      : Error("config error (line " + std::to_string(line) + ", field '" + field + "'): " +
              message),
        field_(std::move(field)),
        line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

private:
  std::string field_;
  int line_;
};

}  // namespace ovlab
