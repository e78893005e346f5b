#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

// Error categories; the C API maps these one-to-one onto status codes.
enum class ErrorCode {
  Validation,   // bad input data (pmf, matrix, channel, argument ranges)
  Parse,        // malformed JSON / schema mismatch
  Degenerate,   // distortion matrix admits a continuum of corner points
  SizeGuard,    // desk-scale guard exceeded
  Numerical,    // solver failure; never a silent wrong answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorCode::Validation, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(ErrorCode::Degenerate, what) {}
};

class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(ErrorCode::SizeGuard, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorCode::Numerical, what) {}
};

}  // namespace secrecy
