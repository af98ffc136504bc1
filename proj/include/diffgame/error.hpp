#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffgame {

// Base class for every error raised by the library. Operations validate their
// preconditions and throw instead of returning partial results.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text readers (edge lists, 3-partition instances, seed lists).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace diffgame
