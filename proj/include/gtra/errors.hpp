#pragma once

#include <stdexcept>
#include <string>

namespace gtra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector lengths disagree with the number of targets.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite intermediate values (overflowing exponent, diverging state).
class NumericError : public Error {
 public:
  using Error::Error;
};

// A requested enumeration exceeds the oracle's size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Invalid parameters or configuration documents.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtra
