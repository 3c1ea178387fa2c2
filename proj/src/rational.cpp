#include "scarrays/rational.hpp"

#include "scarrays/errors.hpp"

#include <cctype>

namespace sca {

namespace {

Rational parse_decimal(std::string_view s) {
  if (s.empty()) throw ParseError("empty number");
  bool neg = false;
  size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw ParseError("bad number: " + std::string(s));
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++scale;
    } else {
      throw ParseError("bad number: " + std::string(s));
    }
  }
  if (digits.empty()) throw ParseError("bad number: " + std::string(s));
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (long k = 0; k < scale; ++k) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return parse_decimal(t);
  Rational num = parse_decimal(trim(std::string_view(t).substr(0, slash)));
  Rational den = parse_decimal(trim(std::string_view(t).substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator: " + t);
  Rational q = num / den;
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  mpz_class num = q.get_num();
  bool neg = num < 0;
  if (neg) num = -num;
  // round(|q| * 10^digits), half away from zero
  mpz_class scaled = (2 * num * scale + q.get_den()) / (2 * q.get_den());
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (neg && s != "0") s.insert(0, "-");
  return s;
}

}  // namespace sca
