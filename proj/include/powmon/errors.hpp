#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powmon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient groups.
class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("group signature mismatch") {}
  explicit SignatureMismatch(const std::string& what) : Error(what) {}
};

/// A value violates the invariants of the type it is being turned into.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An element is not a member of the monoid it was claimed to belong to.
class MembershipViolation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because its input exceeds the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input (set literal, expression, JSON monoid file) failed to parse.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The translation isomorphism cannot be built for the given pair.
class ApplicabilityFailed : public Error {
 public:
  ApplicabilityFailed(std::string condition, const std::string& detail)
      : Error("applicability failed [" + condition + "]: " + detail),
        condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// f({1,a,a^3}) matched neither {1,x,x^3} nor {1,x^2,x^3}. Signals a wrong f.
class DichotomyViolation : public Error {
 public:
  using Error::Error;
};

/// A postcondition the construction guarantees did not hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace powmon
