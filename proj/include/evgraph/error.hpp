#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evgraph {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A required input column is missing or the column configuration is invalid.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& column, const std::string& what)
      : Error(what), column_(column) {}
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

// A single CSV record could not be turned into an event.
class RowError : public Error {
 public:
  RowError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Rule text does not match the rule grammar. `column` is 1-based; `line` is
// set (1-based) when the rule came from a rule file.
class RuleSyntaxError : public Error {
 public:
  RuleSyntaxError(std::size_t column, const std::string& detail, std::size_t line = 0)
      : Error(format(line, column, detail)), column_(column), line_(line), detail_(detail) {}
  std::size_t column() const noexcept { return column_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& detail) {
    std::string out = line > 0 ? "line " + std::to_string(line) + ", " : std::string();
    return out + "column " + std::to_string(column) + ": " + detail;
  }

  std::size_t column_;
  std::size_t line_;
  std::string detail_;
};

// Comparison between property values of different types.
class PropertyTypeError : public Error {
 public:
  using Error::Error;
};

// Graph API misuse: dangling endpoints, empty label sets, mutation after freeze.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Precondition violation on a pure function argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace evgraph
