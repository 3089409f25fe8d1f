#pragma once

#include <stdexcept>
#include <string>

namespace commacat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or object shapes do not fit together.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured vector/dimension budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An object or morphism was handed to an instance it does not belong to.
class ForeignInstance : public Error {
 public:
  using Error::Error;
};

/// A pair (f, g) does not make the defining square commute.
class NotAMorphism : public Error {
 public:
  using Error::Error;
};

/// Abelian-structure operation requested on a context whose functors do not
/// carry the required exactness flags.
class CapabilityMissing : public Error {
 public:
  using Error::Error;
};

/// A connecting morphism (beta, gamma, restricted alpha) has no solution or is
/// not unique. This means a declared exactness flag is false in practice.
class ExactnessViolation : public Error {
 public:
  using Error::Error;
};

class InvalidStability : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Arithmetic overflow in exact rational computations.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace commacat
