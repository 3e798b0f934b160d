#include "qukit/rational.hpp"

#include "qukit/errors.hpp"


#include <cctype>

namespace qukit {

std::string to_string(const RationalValue& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& s, const std::string& whole) {
  if (s.empty()) fail(Errc::ParseError, "empty integer in rational '" + whole + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(Errc::ParseError, "bad integer in rational '" + whole + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      fail(Errc::ParseError, "bad digit in rational '" + whole + "'");
    }
  }
  BigInt r(s.substr(i));
  return s[0] == '-' ? BigInt(-r) : r;
}

}  // namespace

RationalValue parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
    return RationalValue(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt ipart = parse_integer(whole, text);
    BigInt fpart = frac.empty() ? BigInt(0) : parse_integer(frac, text);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) {
      fail(Errc::ParseError, "bad fraction in '" + text + "'");
    }
    RationalValue r(ipart * scale + fpart, scale);
    return negative ? RationalValue(-r) : r;
  }
  return RationalValue(parse_integer(text, text));
}

double to_double(const RationalValue& v) { return v.convert_to<double>(); }

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

bool primes_divide(BigInt n, const BigInt& k) {
  if (n <= 0) return false;
  for (BigInt g = boost::multiprecision::gcd(n, k); g > 1; g = boost::multiprecision::gcd(n, k)) {
    while (n % g == 0) n /= g;
  }
  return n == 1;
}

}  // namespace qukit
