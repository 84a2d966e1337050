#pragma once

#include <stdexcept>
#include <string>

namespace matsuo {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A supplied group generator is not an involution (or is the identity).
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

/// A root-system rank outside the supported range.
class InvalidRank : public Error {
 public:
  using Error::Error;
};

/// A structure-constant parameter outside its admissible set (e.g. zero).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between an element/matrix and the ambient space.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A parameter choice that collapses an eigenvalue decomposition.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// Operation requires an indecomposable algebra but the input splits.
class Decomposable : public Error {
 public:
  using Error::Error;
};

/// A denominator that must be invertible vanished for these parameters.
class SingularParameter : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration/dimension budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A highest-weight label outside the admissible grid.
class InvalidLabel : public Error {
 public:
  using Error::Error;
};

/// A series index outside the supported range.
class InvalidSeries : public Error {
 public:
  using Error::Error;
};

/// A size/index argument outside its admissible range.
class InvalidSize : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (group files, rationals, cycle notation, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
/// Thrown by built-in cross-checks; indicates a bug, never user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace matsuo
