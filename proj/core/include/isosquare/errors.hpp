#pragma once

#include <stdexcept>
#include <string>

namespace isosquare {

/// An argument outside the domain of an operation (n = 0, base < 2, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A lemma-style hypothesis is not met by the caller's input, e.g. an even
/// argument where an odd one is required or a shift below the admissible bound.
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A weight identity that must hold by construction did not. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A file could not be read, written or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isosquare
