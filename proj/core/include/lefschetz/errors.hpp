#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

// Exit-code classes for the command line front end.
enum class ErrorClass {
  input = 1,      // malformed text, unknown names, bad dimensions
  validation = 2, // the mathematics of the input is wrong (Jacobi, degenerate omega)
  internal = 3,   // a theorem-level self check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string &what)
      : std::runtime_error(what), class_(cls) {}
  ErrorClass error_class() const noexcept { return class_; }

private:
  ErrorClass class_;
};

class InputError : public Error {
public:
  explicit InputError(const std::string &what) : Error(ErrorClass::input, what) {}
};

/// Parse failure; `position` is a 0-based byte offset into the parsed text.
class SyntaxError : public InputError {
public:
  SyntaxError(const std::string &what, std::size_t position)
      : InputError("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class IndexOutOfRange : public InputError {
public:
  using InputError::InputError;
};

class EntryCountMismatch : public InputError {
public:
  using InputError::InputError;
};

class DimMismatch : public InputError {
public:
  using InputError::InputError;
};

class AmbientMismatch : public InputError {
public:
  using InputError::InputError;
};

class MixedDegree : public InputError {
public:
  using InputError::InputError;
};

class NotSubspace : public InputError {
public:
  using InputError::InputError;
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string &what) : Error(ErrorClass::validation, what) {}
};

class JacobiViolation : public ValidationError {
public:
  JacobiViolation(const std::string &what, int degree, std::string witness)
      : ValidationError(what), degree_(degree), witness_(std::move(witness)) {}
  int degree() const noexcept { return degree_; }
  const std::string &witness() const noexcept { return witness_; }

private:
  int degree_;
  std::string witness_;
};

class OddDimension : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotClosed : public ValidationError {
public:
  NotClosed(const std::string &what, std::string d_omega)
      : ValidationError(what), d_omega_(std::move(d_omega)) {}
  const std::string &d_omega() const noexcept { return d_omega_; }

private:
  std::string d_omega_;
};

class Degenerate : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class InternalInconsistency : public Error {
public:
  explicit InternalInconsistency(const std::string &what)
      : Error(ErrorClass::internal, "internal inconsistency: " + what) {}
};

} // namespace lefschetz
