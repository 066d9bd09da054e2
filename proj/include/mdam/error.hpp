#pragma once

#include <stdexcept>
#include <string>

namespace mdam {

/// Malformed input data or data that violates a record invariant.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid model specification, configuration, or argument.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested model is not identified by the available information.
class IdentificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite likelihood or state during sampling.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system or stream failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mdam
