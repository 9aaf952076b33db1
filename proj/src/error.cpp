#include "qgc/error.hpp"

namespace qgc {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::CapacityExceeded: return "capacity-exceeded";
    case ErrorKind::UnknownLetter: return "unknown-letter";
    case ErrorKind::FormatError: return "format-error";
  }
  return "unknown";
}

FormatError::FormatError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::FormatError,
            "format-error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace qgc
