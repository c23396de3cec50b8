#pragma once

#include <stdexcept>
#include <string>

namespace langdist {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input file content. Carries origin (path or asset name) and a
// 1-based line number when one is known (0 = whole file).
class ParseError : public Error {
 public:
  ParseError(std::string origin, int line, const std::string& message)
      : Error(format(origin, line, message)),
        origin_(std::move(origin)),
        line_(line) {}

  const std::string& origin() const { return origin_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& origin, int line,
                            const std::string& message) {
    if (line > 0)
      return origin + ":" + std::to_string(line) + ": " + message;
    return origin + ": " + message;
  }

  std::string origin_;
  int line_;
};

// Contract violation on otherwise well-formed data (empty input, value out
// of range, degenerate statistic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace langdist
