#pragma once

#include <stdexcept>
#include <string>

namespace bm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (K0 at t <= 0, x too close to a singularity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Moment or series that does not converge for the given parameters.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Malformed input: invalid sum-rule indices, bad ranges, unknown names.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// The requested accuracy cannot be certified at the configured working precision
// or refinement budget. `best_value` / `best_err` carry the last estimate when available.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what, std::string best_value = {}, std::string best_err = {})
      : Error(what), best_value(std::move(best_value)), best_err(std::move(best_err)) {}
  std::string best_value;
  std::string best_err;
};

// An intermediate quantity left the representable exponent range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An exact identity that must hold by construction failed; signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bm
