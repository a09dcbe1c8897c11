#pragma once

#include <stdexcept>
#include <string>

namespace deepmh {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector or matrix dimensions do not agree with the model.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (non-finite input, bad rate, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed model / PCA / CSV / config text. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

class TrainingDiverged : public Error {
 public:
  TrainingDiverged(int epoch, const std::string& what)
      : Error(what), epoch_(epoch) {}
  int epoch() const noexcept { return epoch_; }

 private:
  int epoch_;
};

/// The input-backpropagation objective became non-finite.
class OptimizationDiverged : public Error {
 public:
  using Error::Error;
};

class RankDeficiency : public Error {
 public:
  RankDeficiency(int achievable_k, const std::string& what)
      : Error(what), achievable_k_(achievable_k) {}
  int achievable_k() const noexcept { return achievable_k_; }

 private:
  int achievable_k_;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

/// Correlation of a constant sequence.
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or missing experiment configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace deepmh
