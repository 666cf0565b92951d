#ifndef QALG_ERROR_HPP
#define QALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qalg {

/// Domain error: invalid input, violated precondition, or an unbounded
/// computation. Everything the toolkit reports to users derives from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qalg

#endif  // QALG_ERROR_HPP
