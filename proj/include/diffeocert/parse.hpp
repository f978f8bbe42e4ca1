#pragma once

#include "diffeocert/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace diffeocert {

/// Error raised for malformed polynomial text; `position` is the 0-based
/// offset of the offending character in the input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parse a polynomial expression over variables x1..x<dimension>.
///
/// Grammar (whitespace insignificant): a signed sum of terms, each term a
/// product of an optional rational coefficient ("p" or "p/q") and variable
/// powers "x<i>^<k>" with "*" between factors optional.  Consecutive signs
/// fold ("- -2*x1" is "+2*x1"), which keeps textual parameter substitution
/// simple.  Terms are accumulated exactly, so "x1 - x1" parses to zero.
Polynomial parse_polynomial(const std::string& text, int dimension);

}  // namespace diffeocert
