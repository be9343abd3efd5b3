#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fairslice {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. Always kept in lowest terms with a
// positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an input fails schema or precondition validation (CLI exit 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a resource guard is exceeded (CLI exit 3).
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p", "p/q" (q > 0 after sign normalization) or a plain decimal
// such as "0.25" / "-3.5".
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

// Rounded decimal rendering with `digits` places after the point.
std::string to_decimal(const Rational& r, int digits);

}  // namespace fairslice
