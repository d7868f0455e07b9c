#pragma once

#include <stdexcept>
#include <string>

namespace clusterseed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in Laurent rings with different variable counts.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A Laurent division that does not come out exact. Seeds reachable from an
/// identity cluster never trigger this.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Bad vertex index, bad permutation, malformed matrix and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Mutation at, or permutation moving, a frozen vertex.
class FrozenVertex : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation needed a fully enumerated (closed) mutation class.
class NotClosed : public Error {
 public:
  using Error::Error;
};

/// Propagating an automorphism along the action graph hit two different
/// images for one seed: the relation is not regular on this class.
class PropagationConflict : public Error {
 public:
  using Error::Error;
};

/// A check exceeded one of its configured bounds.
class BudgetViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterseed
