#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace belfl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error at a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A truth constant outside [0,1].
class ConstantRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Vocabulary, frame or binary-variable cap exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class InvalidMassError : public Error {
 public:
  using Error::Error;
};

class NotABeliefFunctionError : public Error {
 public:
  using Error::Error;
};

class NotAProbabilityError : public Error {
 public:
  using Error::Error;
};

class NotATotalPreorderError : public Error {
 public:
  using Error::Error;
};

class InconsistentTheoryError : public Error {
 public:
  using Error::Error;
};

/// Branch-and-bound node budget exhausted.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace belfl
