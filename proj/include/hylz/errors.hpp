#pragma once

#include <stdexcept>
#include <string>

namespace hylz {

/// Input outside the region where a formula is real-valued or convergent.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input for which a formula is formally 0/0 (e.g. vanishing coupling in a denominator).
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative or adaptive procedure did not reach its target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or missing reference data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace hylz
