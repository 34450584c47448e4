#pragma once

#include <stdexcept>
#include <string>

namespace wordseq {

// Argument outside the domain of an operation (bad letter, n = 0, odd f_n order).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition was not met, e.g. iterating a non-prolongable morphism.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller-supplied data is insufficient for the requested check.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed while computing a result.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wordseq
