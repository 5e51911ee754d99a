#include "pacdim/rational.hpp"

#include <cctype>

#include "pacdim/errors.hpp"

namespace pacdim {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw validation_error("empty integer in rational literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw validation_error("sign without digits in rational literal");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw validation_error("invalid digit in rational literal: '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw validation_error("zero denominator in rational literal");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw validation_error("trailing dot in rational literal");
    bool negative = !head.empty() && head[0] == '-';
    BigInt whole = head.empty() || head == "-" || head == "+" ? BigInt(0) : parse_integer(head);
    BigInt digits = parse_integer(frac);
    if (digits < 0) throw validation_error("malformed decimal literal");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = abs(whole) * scale + digits;
    if (negative || whole < 0) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace pacdim
