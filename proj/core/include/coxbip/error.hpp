#pragma once

#include <stdexcept>
#include <string>

namespace coxbip {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input document could not be turned into a Coxeter matrix.
/// `where()` is either a byte offset ("byte 17") or a JSON pointer ("/labels/2").
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A configured size limit (rank, ball size, word length, element count) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace coxbip
