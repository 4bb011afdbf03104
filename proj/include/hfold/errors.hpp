#pragma once

#include <stdexcept>
#include <string>

namespace hfold {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic guard rail: 64-bit overflow or a size guard tripped.
/// The CLI maps these to exit code 3, all other errors to exit code 2.
class ArithmeticGuard : public Error {
 public:
  using Error::Error;
};

/// A computation would leave the signed 64-bit range.
class Overflow : public ArithmeticGuard {
 public:
  using ArithmeticGuard::ArithmeticGuard;
};

/// A work-size guard (enumeration count, oracle multiset count, bit-window
/// width) was exceeded. The message names the guard constant.
class TooLarge : public ArithmeticGuard {
 public:
  using ArithmeticGuard::ArithmeticGuard;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public Error {
 public:
  using Error::Error;
};

/// Operation needs at least two elements (gcd of differences, normal form).
class TooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidH : public Error {
 public:
  using Error::Error;
};

/// Input set must have minimum 0 and difference-gcd 1.
class NotNormalForm : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A family id violates its parameter constraints.
class BadParameters : public Error {
 public:
  using Error::Error;
};

/// The requested fold count is outside the range a family formula covers.
class UnsupportedH : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfold
