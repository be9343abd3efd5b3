#include "fairslice/rational.hpp"

#include <cctype>

namespace fairslice {

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw ValidationError("empty integer literal");
  size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ValidationError("bad integer literal: " + text);
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ValidationError("bad integer literal: " + text);
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw ValidationError("non-positive denominator in: " + text);
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw ValidationError("bad decimal literal: " + text);
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += "0";
    BigInt whole = parse_integer(head);
    BigInt frac_digits = parse_integer(frac);
    if (frac_digits < 0) throw ValidationError("bad decimal literal: " + text);
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = abs(whole) * scale + frac_digits;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt num = numerator(r) * scale;
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = (num + den / 2) / den;  // round half away from zero
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace fairslice
