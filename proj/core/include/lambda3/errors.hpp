#pragma once

#include <stdexcept>
#include <string>

namespace lambda3 {

/// Base of every recoverable error raised by the library. An error may carry
/// the id of the criterion that was being evaluated when it was raised.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, std::string criterion = {})
      : std::runtime_error(what), criterion_(std::move(criterion)) {}

  const std::string& criterion() const noexcept { return criterion_; }

 private:
  std::string criterion_;
};

/// Input outside an operation's domain (3 | d, non-squarefree radicand, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A p-adic quantity is not known to the precision a caller asked for.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be 3-integral is not.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// hensel_sqrt on a non-square.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of a local normal form does not hold at working precision.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency: a theorem-backed assertion failed. Never expected.
class LogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lambda3
