// Exception types shared across the engine.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trustproc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a string cannot be canonicalized into an absolute IRI.
class InvalidIri : public Error {
 public:
  InvalidIri(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Publication-time literal that does not parse (or is not unique).
class MalformedTimestamp : public Error {
 public:
  using Error::Error;
};

// More than one attribution quad for a claim; never tie-broken silently.
class AmbiguousSource : public Error {
 public:
  explicit AmbiguousSource(const std::string& claim)
      : Error("ambiguous source: multiple attribution quads for <" + claim + ">"),
        claim(claim) {}
  std::string claim;
};

// Document-level syntax error; line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// Policy text error; carries the token set the parser would have accepted.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {})
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column),
        expected(std::move(expected)) {}
  std::size_t line;
  std::size_t column;
  std::vector<std::string> expected;
};

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& claim)
      : Error("unknown claim <" + claim + ">"), claim(claim) {}
  std::string claim;
};

// Publisher filter invoked without a requester identity.
class MissingRequester : public Error {
 public:
  MissingRequester() : Error("publisher filter requires a requester identity") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trustproc
