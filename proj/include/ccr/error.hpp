#ifndef CCR_ERROR_HPP
#define CCR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccr {

/// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression-syntax error carrying the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ccr

#endif
