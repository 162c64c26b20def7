#pragma once

#include <stdexcept>
#include <string>

namespace metab {

/// Operands built for different ranks d, or an invalid rank.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its domain (index out of range,
/// element with a linear part where only C is allowed, non-constant input).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

inline void check_rank(int d) {
  if (d < 1) throw ConfigError("rank d must be at least 1, got " + std::to_string(d));
}

inline void check_same_rank(int d1, int d2) {
  if (d1 != d2)
    throw ConfigError("rank mismatch: " + std::to_string(d1) + " vs " + std::to_string(d2));
}

inline void check_index(int d, int i) {
  if (i < 1 || i > d)
    throw DomainError("index " + std::to_string(i) + " out of range 1.." + std::to_string(d));
}

}  // namespace metab
