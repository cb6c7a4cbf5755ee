#include "superrr/superscalar.hpp"

#include <cctype>
#include <string>

#include "superrr/errors.hpp"

namespace superrr {

SuperScalar& SuperScalar::operator*=(const SuperScalar& o) {
  // (a + Pi b)(a' + Pi b') = (aa' + bb') + Pi (ab' + a'b)
  Rational body = body_ * o.body_ + soul_ * o.soul_;
  Rational soul = body_ * o.soul_ + o.body_ * soul_;
  body_ = std::move(body);
  soul_ = std::move(soul);
  return *this;
}

SuperScalar SuperScalar::inverse() const {
  const Rational norm = body_ * body_ - soul_ * soul_;
  if (norm == 0) throw NotInvertible("zero divisor in Q[Pi]: " + to_string());
  return {body_ / norm, -soul_ / norm};
}

namespace {

std::string render_coefficient(const Rational& q) {
  if (is_integer(q)) return superrr::to_string(q);
  return "(" + superrr::to_string(q) + ")";
}

std::string strip_blanks(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Rational parse_coefficient(std::string_view s, std::string_view whole) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("malformed super scalar: '" + std::string(whole) + "'");
  return parse_rational(s);
}

}  // namespace

std::string SuperScalar::to_string() const {
  std::string out = superrr::to_string(body_);
  if (soul_ < 0) {
    out += " - " + render_coefficient(-soul_) + "*P";
  } else {
    out += " + " + render_coefficient(soul_) + "*P";
  }
  return out;
}

SuperScalar SuperScalar::parse(std::string_view text) {
  const std::string s = strip_blanks(text);
  if (s.empty()) throw ParseError("empty super scalar");

  SuperScalar acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    // A term ends at the next top-level sign that is not part of "/-".
    std::size_t end = pos;
    int depth = 0;
    for (; end < s.size(); ++end) {
      const char c = s[end];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && end > pos && (c == '+' || c == '-') && s[end - 1] != '/' && s[end - 1] != '(') break;
    }
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("malformed super scalar: '" + std::string(text) + "'");

    Rational coeff;
    bool is_pi = false;
    if (term == "P") {
      coeff = 1;
      is_pi = true;
    } else if (term.size() > 2 && term.substr(term.size() - 2) == "*P") {
      coeff = parse_coefficient(term.substr(0, term.size() - 2), text);
      is_pi = true;
    } else {
      coeff = parse_coefficient(term, text);
    }
    if (negative) coeff = -coeff;
    if (is_pi) {
      acc.soul_ += coeff;
    } else {
      acc.body_ += coeff;
    }
    pos = end;
  }
  return acc;
}

SuperScalar mul(const SuperScalar& x, const SuperScalar& y) { return x * y; }

SuperScalar invert(const SuperScalar& x) { return x.inverse(); }

}  // namespace superrr
