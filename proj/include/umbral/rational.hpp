#pragma once

// Exact rational arithmetic used throughout the library.  Exponents of the
// bivariate series, character multiplicities and cyclotomic coordinates are
// all represented as arbitrary-precision rationals so that every comparison
// the engine performs is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace umbral {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a text table or a CLI argument cannot be parsed.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a request leaves the validity window of a truncated series,
// or when an operand lies outside the expansion domain of the engine.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.
inline Int floor_int(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int ceil_int(const Rational& r) {
  Int f = floor_int(r);
  return f * denominator(r) == numerator(r) ? f : f + 1;
}

inline long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::overflow_error("integer out of range of long");
  return static_cast<long>(v);
}

// Requires r to be integral; used when a rational exponent must land on the
// integer grid of a series.
inline long integer_value(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("exponent is not an integer");
  return to_long(numerator(r));
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Accepts "p" or "p/q" with optional sign; q must be positive.
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den <= 0) throw format_error("rational with nonpositive denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw format_error("malformed rational: " + s);
  }
}

}  // namespace umbral
