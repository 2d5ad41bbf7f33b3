#pragma once

#include <stdexcept>
#include <string>

namespace semilab {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

class EntryOutOfRangeError : public Error {
 public:
  EntryOutOfRangeError(int x, int y, int value, int order)
      : Error("table entry at (" + std::to_string(x) + "," + std::to_string(y) +
              ") is " + std::to_string(value) + ", outside [0," +
              std::to_string(order) + ")"),
        x(x),
        y(y),
        value(value) {}
  int x, y, value;
};

// Carries one concrete witness triple; there may be others.
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(int x, int y, int z)
      : Error("product is not associative, witness (" + std::to_string(x) +
              "," + std::to_string(y) + "," + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  int x, y, z;
};

class OrderCapExceededError : public Error {
 public:
  OrderCapExceededError(int order, int cap)
      : Error("order " + std::to_string(order) + " exceeds cap " +
              std::to_string(cap)),
        order(order),
        cap(cap) {}
  int order, cap;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingZ0Error : public Error {
 public:
  MissingZ0Error() : Error("equation family requires a central element z0") {}
};

class NonCentralZ0Error : public Error {
 public:
  explicit NonCentralZ0Error(int z0)
      : Error("z0 = " + std::to_string(z0) + " is not central"), z0(z0) {}
  int z0;
};

class EmptyCenterError : public Error {
 public:
  explicit EmptyCenterError(const std::string& name)
      : Error("semigroup '" + name + "' has an empty center; no admissible z0") {}
};

class UnknownFamilyError : public Error {
 public:
  using Error::Error;
};

class ZeroAtZ0Error : public Error {
 public:
  using Error::Error;
};

class SignConditionFailedError : public Error {
 public:
  using Error::Error;
};

// Tripwire: a formula the theory says must solve the equation failed its
// residual re-check.  Never swallowed.
class ResidualCheckFailedError : public Error {
 public:
  ResidualCheckFailedError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

class EigenSolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace semilab
