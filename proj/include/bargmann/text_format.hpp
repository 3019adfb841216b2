#pragma once

// Whitespace-free polynomial text format shared by the CLI and golden files:
//
//   1*t1^2-2*t1*t2+1*t2^2      (1/2-3i)*u1*v2      2i*t1      0
//
// Terms appear in canonical monomial order, every term carries an explicit
// coefficient, and variables are t,u,v for d <= 3 or x<axis>_<particle>.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bargmann/polynomial.hpp"

namespace bargmann {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using VariableNamer = std::function<std::string(VariableId)>;

/// t1, u2, v3 when dims <= 3; x4_1 style otherwise.
VariableNamer cartesian_names(int dims = 3);

std::string format_polynomial(const Polynomial& p, const VariableNamer& name);
std::string format_polynomial(const Polynomial& p, int dims = 3);

/// Parses the text format. Accepts both naming styles and, leniently,
/// terms without a coefficient ("t1*u2"). Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace bargmann
