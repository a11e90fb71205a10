#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Invalid Coxeter matrix, weights or malformed config input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search exceeded its node cap; the computation was abandoned, not guessed.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product or lookup needed an element outside the enumerated ball.
class OutOfBallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its mathematical domain (e.g. left cell id of w not in the lowest cell).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant failed. Signals a bug or a genuine discrepancy; never resolved silently.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hecke
