#pragma once

#include <stdexcept>
#include <string>

namespace lens {

/// Base of every library error; callers that only need a message catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or integration through) the pole of a singular metric.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A curve sample with zero speed, or sampling too coarse for a continuous lift.
class ImmersionError : public Error {
 public:
  using Error::Error;
};

/// Two strands meet with parallel tangents, or a crossing pair is degenerate.
class TangencyError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be integral (winding, crossing type) was not.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Adjacent samples too far apart for the requested piecewise-linear refinement.
class RefinementError : public Error {
 public:
  using Error::Error;
};

}  // namespace lens
