#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgc {

enum class ErrorKind {
  InvalidParams,
  CapacityExceeded,
  UnknownLetter,
  FormatError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Table parse failure. Line and column are 1-based; column 0 means the
/// whole line (or the whole file when line is 0).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace qgc
