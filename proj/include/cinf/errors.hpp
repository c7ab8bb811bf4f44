#pragma once

#include <stdexcept>
#include <string>

namespace cinf {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// evaluation of a partial primitive outside its domain (recip at 0, log on (-inf,0])
struct DomainError : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  using Error::Error;
};

struct DuplicateName : Error {
  using Error::Error;
};

struct MissingImage : Error {
  using Error::Error;
};

struct RingMismatch : Error {
  using Error::Error;
};

struct NotPolynomial : Error {
  using Error::Error;
};

struct QuadratureFailure : Error {
  using Error::Error;
};

struct PreconditionUnverified : Error {
  using Error::Error;
};

struct WitnessMissing : Error {
  using Error::Error;
};

struct TargetMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct NoUpperBound : Error {
  using Error::Error;
};

struct CoconeIncoherent : Error {
  using Error::Error;
};

struct NotAChain : Error {
  using Error::Error;
};

// parse-time errors carry a source location
struct ParseError : Error {
  int line, column;
  ParseError(int line, int column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
};

struct SyntaxError : ParseError {
  using ParseError::ParseError;
};

struct UnknownSymbol : ParseError {
  using ParseError::ParseError;
};

struct ArityError : ParseError {
  using ParseError::ParseError;
};

}  // namespace cinf
