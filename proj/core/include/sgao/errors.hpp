#pragma once

#include <stdexcept>
#include <string>

namespace sgao {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Tensor shapes do not conform for an operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An architecture or hyper-parameter setting is invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An index does not refer to an existing element.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A recorded forward trace was required but not available.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// A Langevin chain left the admissible region. Carries the step index
/// at which the bound was exceeded.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, int step) : Error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// File input/output failure.
class IoError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public IoError {
 public:
  using IoError::IoError;
};

class BadMagicError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class VersionError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

class TruncationError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

}  // namespace sgao
