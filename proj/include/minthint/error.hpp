#pragma once

#include <stdexcept>
#include <string>

namespace minthint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An error tied to a source line of a mini-language program.
class SourceError : public Error {
 public:
  SourceError(const std::string& kind, int line, const std::string& message)
      : Error(kind + " at line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class SyntaxError : public SourceError {
 public:
  SyntaxError(int line, const std::string& message) : SourceError("syntax error", line, message) {}
};

class TypeError : public SourceError {
 public:
  TypeError(int line, const std::string& message) : SourceError("type error", line, message) {}
};

class UnsupportedStatement : public SourceError {
 public:
  UnsupportedStatement(int line, const std::string& message)
      : SourceError("unsupported statement", line, message) {}
};

class TestSuiteError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotExecuted : public Error {
 public:
  using Error::Error;
};

class NoFailingTests : public Error {
 public:
  NoFailingTests() : Error("test suite has no failing test") {}
};

class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class EmptyTransformer : public Error {
 public:
  EmptyTransformer() : Error("state transformer is empty") {}
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class TooFewSamples : public Error {
 public:
  using Error::Error;
};

class SingularControl : public Error {
 public:
  SingularControl() : Error("controlling set is rank-degenerate") {}
};

class RepairedStillFails : public Error {
 public:
  using Error::Error;
};

}  // namespace minthint
