#include "psl/rational.hpp"

#include <stdexcept>

namespace psl {

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ((ch == '-' || ch == '+') && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("malformed rational: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace psl
