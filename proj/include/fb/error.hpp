#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fb {

enum class ErrorKind {
  Parse,
  UnknownVariable,
  NotPrime,
  NotHomogeneous,
  UnitIdeal,
  InconsistentBlocks,
  AmbientMismatch,
  ZeroDivisorQuery,
  InfiniteLength,
  WrongDimension,
  NotPrimary,
  NotMonomial,
  MissingMultiplicities,
  NoParameterFound,
  Overflow,
  ResourceBound,
  LiftFailure,
  CacheCorrupt,
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             ErrorKind kind = ErrorKind::Parse)
      : Error(kind, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fb
