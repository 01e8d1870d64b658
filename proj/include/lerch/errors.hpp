#ifndef LERCH_ERRORS_HPP
#define LERCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lerch {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument violates a precondition (alpha <= -1, n < 1, k > n, ...).
class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// Evaluation requested outside the integral representation's domain:
// z on the cut [1, +inf), s <= 0 or a <= 0.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// The a priori sizing demands a rule order beyond N_MAX (z too close to
// the cut [1, +inf) for the requested tolerance).
class SizingOverflow : public Error {
 public:
  explicit SizingOverflow(const std::string& msg) : Error(msg) {}
};

// The symmetric tridiagonal eigensolver did not converge or produced an
// invalid spectrum. Never ignored silently.
class EigensolverFailure : public Error {
 public:
  explicit EigensolverFailure(const std::string& msg) : Error(msg) {}
};

// A reference computation (series or adaptive quadrature) stalled before
// reaching the requested accuracy.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

}  // namespace lerch

#endif  // LERCH_ERRORS_HPP
