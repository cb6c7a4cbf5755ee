#include "superrr/rational.hpp"

#include <cctype>

#include "superrr/errors.hpp"

namespace superrr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view digits, std::string_view whole, bool allow_sign) {
  std::string_view body = digits;
  std::string sign;
  if (allow_sign && !body.empty() && (body.front() == '-' || body.front() == '+')) {
    if (body.front() == '-') sign = "-";
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  return mpz_class(sign + std::string(body), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text, true));

  const mpz_class num = parse_integer(trim(s.substr(0, slash)), text, true);
  const mpz_class den = parse_integer(trim(s.substr(slash + 1)), text, false);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational ratio(long p, long q) {
  if (q == 0) throw ParseError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational factorial(long n) {
  mpz_class acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

}  // namespace superrr
