#pragma once

#include <stdexcept>
#include <string>

namespace lrkm {

/// Base of every exception thrown by lrkm.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A basis or kernel construction collapsed: every vector was dropped by
/// Gram-Schmidt, or R_theta(theta) is numerically zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Floating-point failure during a solve, such as a non-finite right-hand side.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrkm
