#pragma once

#include <stdexcept>
#include <string>

namespace logt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: dimensions, hyperparameters, config files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Failure of a numerical procedure (eigensolver non-convergence,
// fixed-point iteration without a fixed point, oracle bound violation).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed data file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace logt
