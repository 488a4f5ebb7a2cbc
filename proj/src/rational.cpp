#include "stec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace stec {

std::string to_fraction_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

Rational parse_fraction(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) fail();

  auto take_digits = [&](std::string_view& v) {
    std::string out;
    while (!v.empty() && std::isdigit(static_cast<unsigned char>(v.front()))) {
      out += v.front();
      v.remove_prefix(1);
    }
    return out;
  };

  BigInt num(take_digits(s));
  BigInt den = 1;
  if (!s.empty()) {
    if (s.front() != '/') fail();
    s.remove_prefix(1);
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) fail();
    den = BigInt(take_digits(s));
    if (!s.empty()) fail();
    if (den == 0) throw std::invalid_argument("zero denominator in rational");
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace stec
