#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horn {

// Exact arithmetic throughout: cpp_int coefficients, cpp_rational values.
// cpp_rational keeps numerator/denominator reduced with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Serializes as "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "p/q", or an exact decimal such as "-1.25" (denominator 10^k).
/// Whitespace is not accepted; a zero denominator is an error.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto to_integer = [](std::string_view s) {  // cpp_int rejects a leading '+'
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer{std::string(s)};
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) fail();
    Integer d = to_integer(den);
    if (d == 0) fail();
    return Rational(to_integer(num), d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer(frac) || frac[0] == '+' || frac[0] == '-') fail();
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) {
      whole = "0";
    } else if (!is_integer(whole)) {
      fail();
    }
    Integer scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = to_integer(whole);
    if (w < 0) w = -w;
    Integer value = w * scale + to_integer(frac);
    if (negative) value = -value;
    return Rational(value, scale);
  }
  if (!is_integer(text)) fail();
  return Rational(to_integer(text));
}

}  // namespace horn
