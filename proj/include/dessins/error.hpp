#pragma once

#include <stdexcept>
#include <string>

namespace dessins {

enum class Errc {
  DegreeMismatch,
  NotBijection,
  NotTransitive,
  CapExceeded,
  UnknownName,
  BadGenus,
  BadHost,
  BadPosition,
  InternalParity,
  NotAutomorphisms,
  NotSubgroupClosed,
  NonIntegerGenus,
  ShapeMismatch,
  ConventionViolation,
  Disconnected,
  VectorInvalid,
  VerificationFailed,
  NotGenerating,
  GenusTooSmall,
  InvalidGroup,
  InvalidArgument,
  Parse,
  Io,
};

const char *errc_name(Errc code) noexcept;

// Single exception type for the library; the code selects the failure class
// and what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

// Parse failures carry a 1-based position in the offending text.
class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string &msg)
      : Error(Errc::Parse, "line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace dessins
