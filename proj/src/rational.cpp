#include "diffeocert/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace diffeocert {

Rational parse_rational(const std::string& text) {
  // Strip surrounding whitespace, then hand the rest to GMP via the
  // mpq constructor, which accepts "p" and "p/q".  We pre-validate the
  // shape so that garbage like "1/2/3" or "" gives a clean error instead
  // of a GMP abort.
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(begin, end - begin);
  if (body.empty()) throw std::invalid_argument("empty rational literal");

  std::size_t i = 0;
  if (body[i] == '+' || body[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw std::invalid_argument("malformed rational literal: " + body);
  if (i < body.size()) {
    if (body[i] != '/') throw std::invalid_argument("malformed rational literal: " + body);
    ++i;
    std::size_t den_digits = 0;
    std::size_t den_start = i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != body.size())
      throw std::invalid_argument("malformed rational literal: " + body);
    if (body.substr(den_start).find_first_not_of('0') == std::string::npos)
      throw std::invalid_argument("zero denominator in rational literal: " + body);
  }
  return Rational(body);
}

std::string format_rational(const Rational& value) {
  return value.str();
}

Rational rational_pow(const Rational& base, unsigned long long exponent) {
  // 0^0 = 1 by the convention used for circuit numbers.
  Rational result = 1;
  Rational acc = base;
  unsigned long long e = exponent;
  while (e > 0) {
    if (e & 1ULL) result *= acc;
    e >>= 1ULL;
    if (e > 0) acc *= acc;
  }
  return result;
}

Integer denominator_lcm(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const Rational& v : values) {
    Integer d = boost::multiprecision::denominator(v);
    l = boost::multiprecision::lcm(l, d);
  }
  return l;
}

double to_double_hint(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace diffeocert
