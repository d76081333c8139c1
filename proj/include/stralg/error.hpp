#pragma once

#include <stdexcept>
#include <string>

namespace stralg {

// Analysis-level failure (bad operation input, cap exceeded, ...). CLI exit 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// DSL syntax / reference error with position. CLI exit 2.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace stralg
