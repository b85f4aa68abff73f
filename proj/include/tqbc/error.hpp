#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqbc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sentence text. `token()` is 1-based; `offset()` is the byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t token, std::size_t offset)
      : Error(message), token_(token), offset_(offset) {}

  std::size_t token() const noexcept { return token_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t token_;
  std::size_t offset_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(std::string atom)
      : Error("unknown atom '" + atom + "'"), atom_(std::move(atom)) {}

  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// Bad textual input that is not a sentence: tpo strings, world lists, schedules, ids.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidVocabularyError : public Error {
 public:
  using Error::Error;
};

class InvalidTpoError : public Error {
 public:
  using Error::Error;
};

class InvalidScheduleError : public Error {
 public:
  using Error::Error;
};

/// Revision by a sentence with no models.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

/// Contraction by an input outside the operator's domain (tautology, or
/// contradiction for lexicographic contraction).
class InadmissibleContractionError : public Error {
 public:
  using Error::Error;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A postulate that needs a contraction operator was checked without one.
class OperatorMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace tqbc
