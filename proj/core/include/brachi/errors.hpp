#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace brachi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid problem, grid or run configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A coordinate or index outside its axis.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Height above the starting level, where the mass point would need energy it never had.
class NegativeEnergy : public Error {
 public:
  using Error::Error;
};

/// A segment that cannot be traversed. `stage()` is the 1-based stage when known.
class InfeasibleSegment : public Error {
 public:
  explicit InfeasibleSegment(const std::string& what, std::optional<int> stage = std::nullopt)
      : Error(what), stage_(stage) {}
  std::optional<int> stage() const noexcept { return stage_; }

 private:
  std::optional<int> stage_;
};

/// The terminal condition is unreachable from the start state.
class NoFeasiblePath : public Error {
 public:
  using Error::Error;
};

/// A policy roll-out visited a state without a stored control.
class InfeasibleRollout : public Error {
 public:
  InfeasibleRollout(const std::string& what, int stage) : Error(what), stage_(stage) {}
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

/// The cycloid ratio equation could not be bracketed.
class NoBracket : public Error {
 public:
  using Error::Error;
};

}  // namespace brachi
