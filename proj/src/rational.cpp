#include "loopcell/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace loopcell {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  bool digits = false, slash = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw std::invalid_argument("bad rational literal '" + text + "'");
    }
  }
  if (!digits) throw std::invalid_argument("bad rational literal '" + text + "'");
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& x) { return x.get_str(); }

}  // namespace loopcell
