#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpe {

/// Precondition violated: out-of-range id, wrong graph shape, unrealizable value.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step sequence that is not a walk. `position` is 1-based.
class ValidityError : public DomainError {
 public:
  ValidityError(const std::string& what, std::size_t position)
      : DomainError(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Endpoint or variety mismatch when composing words or arrows.
class CompositionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedVariety : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input too large for an exhaustive search at the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bpe
