#pragma once

#include <stdexcept>
#include <string>

namespace herald {

// Physical or mathematical parameter outside its admissible range.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a preallocated capacity (ladder order, truncation size).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// An iterative summation failed to reach its tolerance within the guard limit.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed beyond rounding tolerance; indicates a bug,
// not bad input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A requested quantity has no finite value (e.g. Cramer-Rao bound at zero
// Fisher information).
class UndefinedBoundError : public std::domain_error {
 public:
  explicit UndefinedBoundError(const std::string& what) : std::domain_error(what) {}
};

// A projection slice carries no probability mass.
class NoSupportError : public std::runtime_error {
 public:
  explicit NoSupportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace herald
