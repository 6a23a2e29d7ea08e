#include "lorflat/rational.hpp"

#include <cctype>

namespace lorflat {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Scalar parse_rational(const std::string& text) {
  const auto fail = [&](const std::string& why) -> Scalar {
    throw ParseError("bad rational '" + text + "': " + why);
  };

  std::string num = text;
  std::string den = "1";
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    if (text.find('/', slash + 1) != std::string::npos) return fail("more than one '/'");
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }

  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num = num.substr(1);
  }
  if (!digits_only(num)) return fail("numerator is not an integer");
  if (!digits_only(den)) return fail("denominator is not a positive integer");

  mpz_class n(num), d(den);
  if (negative) n = -n;
  if (d == 0) return fail("zero denominator");

  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Scalar& q) { return q.get_str(); }

} // namespace lorflat
