#pragma once

#include <stdexcept>
#include <string>

namespace bihomega {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that had to be inverted is singular.
class Singular : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// A checker or construction that needs a commutative semigroup got a non-commutative one.
class NonCommutativeOmega : public Error {
 public:
  using Error::Error;
};

class NonzeroWeight : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bihomega
