#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace donkeykit {

// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownLexeme : public Error {
 public:
  explicit UnknownLexeme(const std::string& name)
      : Error("unknown lexeme '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class MissingPredicate : public Error {
 public:
  explicit MissingPredicate(const std::string& name)
      : Error("model has no extension for '" + name + "'") {}
};

class LexiconError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Raised when evaluation meets a value whose shape contradicts its type.
// Only reachable through unchecked terms.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class WrongType : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class SizeOverflow : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace donkeykit
