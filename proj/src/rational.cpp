#include "bihom/rational.hpp"

#include <ostream>

namespace bihom {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

std::string to_string(const Rational& r) {
  std::string s = r.num().str();
  if (r.den() != 1) {
    s += '/';
    s += r.den().str();
  }
  return s;
}

namespace {

bool parse_int_token(std::string_view text, Int& out) {
  if (text.empty()) return false;
  size_t i = 0;
  if (text[0] == '-') {
    if (text.size() == 1) return false;
    i = 1;
  }
  for (size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  if (text[i] == '0' && text.size() > i + 1) return false; // no leading zeros
  if (text[0] == '-' && text[i] == '0') return false;      // no "-0"
  out = Int(std::string(text));
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const size_t slash = text.find('/');
  Int num, den;
  if (slash == std::string_view::npos) {
    if (!parse_int_token(text, num)) throw ParseError("invalid rational '" + std::string(text) + "'");
    return Rational(num);
  }
  if (!parse_int_token(text.substr(0, slash), num) || !parse_int_token(text.substr(slash + 1), den))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  if (den <= 0) throw ParseError("rational '" + std::string(text) + "' has nonpositive denominator");
  if (den == 1) throw ParseError("rational '" + std::string(text) + "' must be written without '/1'");
  if (boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den) != 1)
    throw ParseError("rational '" + std::string(text) + "' is not in lowest terms");
  return Rational(num, den);
}

} // namespace bihom
