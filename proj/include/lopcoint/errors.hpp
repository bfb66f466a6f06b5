#pragma once

#include <stdexcept>
#include <string>

namespace lopcoint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, missing or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A computation could not be carried out (singular matrix, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A request that is well-formed but not meaningful for the model at hand.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace lopcoint
