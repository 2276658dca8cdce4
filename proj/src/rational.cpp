#include "toricslope/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace toricslope {

namespace {

using boost::multiprecision::mpz_int;

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_int parse_integer(const std::string& s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational: \"" + s + "\"");
  return mpz_int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("malformed rational: empty string");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const mpz_int num = parse_integer(trim(s.substr(0, slash)));
    const mpz_int den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("malformed rational: zero denominator in \"" + s + "\"");
    return Rational(num, den);
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.erase(0, 1);
    }
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(whole) || !is_integer_literal(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
    mpz_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational value(mpz_int(whole) * scale + mpz_int(frac), scale);
    return negative ? Rational(-value) : value;
  }

  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_dyadic(const Rational& value) {
  auto den = boost::multiprecision::denominator(value);
  while (den % 2 == 0) den /= 2;
  return den == 1;
}

}  // namespace toricslope
