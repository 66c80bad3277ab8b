#pragma once

#include <stdexcept>
#include <string>

namespace gromov {

/// Base of every exception thrown by the library. The code is a short stable
/// identifier (e.g. "parse", "lattice-mismatch") used in CLI diagnostics.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Malformed user input: class expressions, label strings, option values.
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error("parse", what) {}
};

/// A mathematically meaningful failure: precondition violated, missing table
/// entry, malformed lattice.
class DomainError : public Error {
public:
  DomainError(std::string code, const std::string &what)
      : Error(std::move(code), what) {}
};

/// A model document violates a type invariant. Carries the JSON pointer of
/// the offending value and, when known, its 1-based line.
class ModelError : public Error {
public:
  ModelError(std::string path, int line, const std::string &what);

  const std::string &path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

private:
  std::string path_;
  int line_;
};

} // namespace gromov
