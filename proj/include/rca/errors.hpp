#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rca {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class TableSizeCapExceeded : public Error {
 public:
  explicit TableSizeCapExceeded(std::size_t cap)
      : Error("table would exceed " + std::to_string(cap) + " entries"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotInjective : public Error {
 public:
  NotInjective() : Error("rule is not injective") {}
};

class RadiusCapExceeded : public Error {
 public:
  explicit RadiusCapExceeded(int cap)
      : Error("no inverse found with radius <= " + std::to_string(cap)), cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

/// Raised when a user-supplied inverse does not invert the forward rule.
class NotInverse : public Error {
 public:
  NotInverse() : Error("supplied inverse does not invert the forward rule") {}
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class NotLocalized : public Error {
 public:
  using Error::Error;
};

class PaddingDependence : public Error {
 public:
  using Error::Error;
};

class NonIdentityOutsideWindow : public Error {
 public:
  using Error::Error;
};

class ShapeViolation : public Error {
 public:
  using Error::Error;
};

class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

class PeriodTooSmall : public Error {
 public:
  PeriodTooSmall(int period, int minimum)
      : Error("period " + std::to_string(period) + " is below the minimum " +
              std::to_string(minimum)) {}
};

class NotLTSCA : public Error {
 public:
  NotLTSCA() : Error("automaton is not locally time-symmetric under the given involution") {}
};

}  // namespace rca
