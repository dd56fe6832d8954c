#pragma once

#include <stdexcept>
#include <string>

namespace orbitdeg {

// Argument outside the domain of an operation (odd n for a pair count,
// b < 0 for a binomial, a series without unit constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exact computation produced a value that must be integral but is not.
// Always indicates an arithmetic bug, never bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested quantity has no value here, e.g. a mean degeneracy with
// zero classes.
class UndefinedQuantityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force enumeration asked for an instance above its configured caps.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace orbitdeg
