#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and rationals plus parse/format
 *        helpers.
 *
 * All slope arithmetic in this library is exact: `Int` and `Rat` are
 * arbitrary-precision, `Rat` is always stored in lowest terms with a positive
 * denominator, and nothing anywhere in the artifact touches floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "newton_strata/errors.hpp"

namespace newton_strata {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Numerator in lowest terms (sign lives here).
inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }

/// Denominator in lowest terms; always positive.
inline Int rat_den(const Rat& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Floor division of arbitrary-precision integers, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Largest integer ≤ r.
inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

/// Smallest integer ≥ r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// "p/q" in lowest terms, or just "p" when the value is an integer.
inline std::string format_rational(const Rat& r) {
  std::string out = rat_num(r).str();
  if (!is_integer(r)) {
    out += "/";
    out += rat_den(r).str();
  }
  return out;
}

inline std::string format_int(const Int& v) { return v.str(); }

namespace detail {

inline bool parse_integer_token(const std::string& text, std::size_t begin,
                                std::size_t end, Int* out) {
  if (begin >= end) return false;
  bool negative = false;
  std::size_t i = begin;
  if (text[i] == '+' || text[i] == '-') {
    negative = (text[i] == '-');
    ++i;
  }
  if (i >= end) return false;
  Int value = 0;
  for (; i < end; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  *out = negative ? -value : value;
  return true;
}

}  // namespace detail

/// Parses an arbitrary-precision integer literal ("-12", "+3", "40").
inline Int parse_int(const std::string& text) {
  Int value;
  if (!detail::parse_integer_token(text, 0, text.size(), &value)) {
    throw DomainError(ErrorCode::MalformedInput,
                      "expected an integer literal, got \"" + text + "\"");
  }
  return value;
}

/// Parses "p/q" or an integer literal. Rejects q = 0 and anything that is not
/// a plain decimal fraction.
inline Rat parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text));
  }
  Int num, den;
  if (!detail::parse_integer_token(text, 0, slash, &num) ||
      !detail::parse_integer_token(text, slash + 1, text.size(), &den)) {
    throw DomainError(ErrorCode::MalformedInput,
                      "expected \"p/q\" or an integer, got \"" + text + "\"");
  }
  if (den == 0) {
    throw DomainError(ErrorCode::MalformedInput,
                      "zero denominator in \"" + text + "\"");
  }
  if (den < 0) {  // keep the sign in the numerator
    num = -num;
    den = -den;
  }
  return Rat(num, den);  // reduces to lowest terms
}

/// Exact decimal rendering of r truncated toward zero after `digits`
/// fractional digits, with trailing zeros (and a bare trailing '.') trimmed.
/// Computed by integer long division; used by the SVG renderer so that no
/// floating point enters coordinate formatting.
inline std::string format_decimal(const Rat& r, unsigned digits) {
  Int num = rat_num(r);
  Int den = rat_den(r);
  bool negative = num < 0;
  if (negative) num = -num;
  Int whole = num / den;
  Int rem = num % den;
  std::string frac;
  for (unsigned i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = whole.str();
  if (!frac.empty()) out += "." + frac;
  if (negative && (whole != 0 || !frac.empty())) out = "-" + out;
  return out;
}

}  // namespace newton_strata
