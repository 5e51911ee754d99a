#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pacdim {

/// Exact rational arithmetic everywhere a probability or a function value
/// appears. Floating point is confined to report summaries and the
/// closed-form sample bounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// cpp_rational's relational operators route through slow generic paths;
/// these compare the canonical parts directly (denominators are positive).
inline bool rat_eq(const Rational& a, const Rational& b) {
  return numerator(a) == numerator(b) && denominator(a) == denominator(b);
}
inline bool rat_less(const Rational& a, const Rational& b) {
  return numerator(a) * denominator(b) < numerator(b) * denominator(a);
}
inline bool rat_greater(const Rational& a, const Rational& b) { return rat_less(b, a); }
/// a - b <= t without forming rational intermediates.
inline bool rat_diff_leq(const Rational& a, const Rational& b, const Rational& t) {
  return (numerator(a) * denominator(b) - numerator(b) * denominator(a)) * denominator(t) <=
         numerator(t) * (denominator(a) * denominator(b));
}

/// Accepts "p/q", plain integers ("3", "-2") and decimal notation ("0.25").
Rational parse_rational(std::string_view text);

/// Canonical "p/q" in lowest terms with q >= 1, e.g. "0/1", "-3/2".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

BigInt binomial(int n, int k);

}  // namespace pacdim
