#ifndef CCR_RATIONAL_HPP
#define CCR_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ccr {

// Exact arithmetic scalars. Phase-space coordinates, symplectic form values
// and dimension counts are kept rational; floating point enters only when
// phases or matrix entries are materialized.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" with arbitrary-precision integer parts.
Rational parse_rational(std::string_view text);

/// Formats as "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace ccr

#endif
