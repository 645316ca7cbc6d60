#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nullcert {

// Text-format reader failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

// A documented operation precondition does not hold. `witness` carries the
// offending point (or value) in wire syntax when one exists.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg, std::string witness = {})
      : std::runtime_error(msg), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// q^n (or a requested sweep) exceeds the configured enumeration cap.
class CapExceeded : public PreconditionError {
 public:
  explicit CapExceeded(const std::string& msg) : PreconditionError(msg) {}
};

}  // namespace nullcert
