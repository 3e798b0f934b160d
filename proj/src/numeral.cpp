#include "qukit/numeral.hpp"

#include "qukit/errors.hpp"

#include <algorithm>
#include <map>

namespace qukit {

void check_base(int k) {
  if (k < kMinBase || k > kMaxBase) {
    fail(Errc::InvalidArgument, "base " + std::to_string(k) + " outside [2, 36]");
  }
}

NumeralState::NumeralState(int k) : NumeralState(k, Sign::Plus, {0}, 0) {}

NumeralState::NumeralState(int k, Sign sign, std::vector<std::uint8_t> digits, int point)
    : base_(k), sign_(sign), point_(point), digits_(std::move(digits)) {
  check_base(k);
  if (point < 0 || point > static_cast<int>(digits_.size())) {
    fail(Errc::InvalidArgument, "k-al point " + std::to_string(point) + " outside [0, " +
                                    std::to_string(digits_.size()) + "]");
  }
  for (auto d : digits_) {
    if (d >= k) {
      fail(Errc::InvalidArgument,
           "digit " + std::to_string(d) + " out of range for base " + std::to_string(k));
    }
  }
}

bool NumeralState::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

ComplexNumeral::ComplexNumeral(NumeralState r, NumeralState i) : re(std::move(r)), im(std::move(i)) {
  if (re.base() != im.base()) fail(Errc::BaseMismatch, "complex parts have different bases");
}

namespace {

using Digits = std::vector<std::uint8_t>;

void require_same_base(const NumeralState& a, const NumeralState& b) {
  if (a.base() != b.base()) {
    fail(Errc::BaseMismatch,
         "bases " + std::to_string(a.base()) + " and " + std::to_string(b.base()) + " differ");
  }
}

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Sign with zero treated as positive.
Sign effective_sign(const NumeralState& a) { return a.is_zero() ? Sign::Plus : a.sign(); }

int highest_nonzero(const Digits& d) {
  for (int j = static_cast<int>(d.size()) - 1; j >= 0; --j) {
    if (d[static_cast<std::size_t>(j)] != 0) return j;
  }
  return -1;
}

// Magnitude digits of `a` placed on a grid with `point` fractional and
// `int_len` integer positions.
Digits align(const NumeralState& a, int point, int int_len) {
  Digits out(static_cast<std::size_t>(point + int_len), 0);
  const int shift = point - a.point();
  for (int j = 0; j < a.length(); ++j) {
    if (a.digit(j) != 0) out[static_cast<std::size_t>(j + shift)] = a.digit(j);
  }
  return out;
}

int compare_magnitude(const Digits& x, const Digits& y) {
  for (std::size_t j = x.size(); j-- > 0;) {
    if (x[j] != y[j]) return x[j] < y[j] ? -1 : 1;
  }
  return 0;
}

Digits add_magnitude(const Digits& x, const Digits& y, int k) {
  Digits out(x.size(), 0);
  int carry = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    int s = x[j] + y[j] + carry;
    carry = s / k;
    out[j] = static_cast<std::uint8_t>(s % k);
  }
  if (carry) out.push_back(static_cast<std::uint8_t>(carry));
  return out;
}

// x - y with x >= y.
Digits sub_magnitude(const Digits& x, const Digits& y, int k) {
  Digits out(x.size(), 0);
  int borrow = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    int s = x[j] - y[j] - borrow;
    borrow = s < 0 ? 1 : 0;
    out[j] = static_cast<std::uint8_t>(s + borrow * k);
  }
  return out;
}

struct Aligned {
  Digits x, y;
  int point;
};

Aligned align_pair(const NumeralState& a, const NumeralState& b) {
  const int point = std::max(a.point(), b.point());
  const int int_len = std::max(a.length() - a.point(), b.length() - b.point()) + 1;
  return {align(a, point, int_len), align(b, point, int_len), point};
}

NumeralState signed_sum(const NumeralState& a, Sign sa, const NumeralState& b, Sign sb) {
  const int k = a.base();
  auto [x, y, point] = align_pair(a, b);
  if (sa == sb) return trim(NumeralState(k, sa, add_magnitude(x, y, k), point));
  const int c = compare_magnitude(x, y);
  if (c == 0) return NumeralState(k);
  if (c > 0) return trim(NumeralState(k, sa, sub_magnitude(x, y, k), point));
  return trim(NumeralState(k, sb, sub_magnitude(y, x, k), point));
}

// Increment (+1) or decrement (-1) the magnitude by one unit in the last
// place, keeping L and m. Decrement requires a nonzero magnitude.
Digits step_magnitude(Digits d, int k, int dir) {
  if (dir > 0) {
    for (auto& digit : d) {
      if (digit + 1 < k) {
        ++digit;
        return d;
      }
      digit = 0;
    }
    d.push_back(1);
    return d;
  }
  for (auto& digit : d) {
    if (digit > 0) {
      --digit;
      return d;
    }
    digit = static_cast<std::uint8_t>(k - 1);
  }
  return d;
}

NumeralState shift_ulp(const NumeralState& a, int dir) {
  const int k = a.base();
  const Sign s = effective_sign(a);
  // Moving away from zero grows the magnitude; toward zero shrinks it.
  const bool grow = a.is_zero() || (s == Sign::Plus) == (dir > 0);
  const Sign out_sign = a.is_zero() ? (dir > 0 ? Sign::Plus : Sign::Minus) : s;
  Digits d = step_magnitude(a.digits(), k, grow ? +1 : -1);
  NumeralState r(k, out_sign, std::move(d), a.point());
  if (r.is_zero()) return NumeralState(k, Sign::Plus, r.digits(), r.point());
  return r;
}

char digit_char(std::uint8_t d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

Digits to_digits(BigInt l, int k) {
  Digits out;
  while (l > 0) {
    out.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(l % k)));
    l /= k;
  }
  return out;
}

}  // namespace

RationalValue value(const NumeralState& a) {
  BigInt l = 0;
  for (int j = a.length() - 1; j >= 0; --j) l = l * a.base() + a.digit(j);
  RationalValue v(l, ipow(BigInt(a.base()), static_cast<unsigned>(a.point())));
  return a.sign() == Sign::Minus ? RationalValue(-v) : v;
}

NumeralState encode(const RationalValue& v, int k) {
  check_base(k);
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (!primes_divide(den, BigInt(k))) {
    fail(Errc::NotRepresentable,
         to_string(v) + " has no finite base-" + std::to_string(k) + " representation");
  }
  int m = 0;
  BigInt scale = 1;
  while (scale % den != 0) {
    scale *= k;
    ++m;
  }
  const BigInt l = boost::multiprecision::abs(num) * (scale / den);
  Digits d = to_digits(l, k);
  if (static_cast<int>(d.size()) < m + 1) d.resize(static_cast<std::size_t>(m + 1), 0);
  return trim(NumeralState(k, num < 0 ? Sign::Minus : Sign::Plus, std::move(d), m));
}

NumeralState trim(const NumeralState& a) {
  if (a.is_zero()) return NumeralState(a.base());
  Digits d = a.digits();
  int point = a.point();
  int drop = 0;
  while (drop < point && d[static_cast<std::size_t>(drop)] == 0) ++drop;
  d.erase(d.begin(), d.begin() + drop);
  point -= drop;
  const int len = std::max(point + 1, highest_nonzero(d) + 1);
  d.resize(static_cast<std::size_t>(len), 0);
  return NumeralState(a.base(), a.sign(), std::move(d), point);
}

NumeralState pad(const NumeralState& a, int length, int point) {
  if (point < 0 || length < 0 || point > length) {
    fail(Errc::CannotAlign, "shape (L=" + std::to_string(length) + ", m=" + std::to_string(point) +
                                ") is not a valid string shape");
  }
  if (a.is_zero()) {
    return NumeralState(a.base(), a.sign(), Digits(static_cast<std::size_t>(length), 0), point);
  }
  const NumeralState t = trim(a);
  const int top = highest_nonzero(t.digits());
  const int int_needed = std::max(0, top + 1 - t.point());
  if (point < t.point() || length - point < int_needed) {
    fail(Errc::CannotAlign, format_compact(a) + " does not fit in shape (L=" +
                                std::to_string(length) + ", m=" + std::to_string(point) + ")");
  }
  Digits d(static_cast<std::size_t>(length), 0);
  const int shift = point - t.point();
  for (int j = 0; j <= top; ++j) d[static_cast<std::size_t>(j + shift)] = t.digit(j);
  return NumeralState(a.base(), a.sign(), std::move(d), point);
}

bool eq_arith(const NumeralState& a, const NumeralState& b) {
  return cmp_arith(a, b) == std::strong_ordering::equal;
}

NumeralState add_arith(const NumeralState& a, const NumeralState& b) {
  require_same_base(a, b);
  return signed_sum(a, effective_sign(a), b, effective_sign(b));
}

NumeralState sub_arith(const NumeralState& a, const NumeralState& b) {
  require_same_base(a, b);
  return signed_sum(a, effective_sign(a), b, flip(effective_sign(b)));
}

NumeralState abs_arith(const NumeralState& a) {
  const NumeralState t = trim(a);
  return NumeralState(t.base(), Sign::Plus, t.digits(), t.point());
}

std::strong_ordering cmp_arith(const NumeralState& a, const NumeralState& b) {
  require_same_base(a, b);
  const Sign sa = effective_sign(a);
  const Sign sb = effective_sign(b);
  if (sa != sb) return sa == Sign::Minus ? std::strong_ordering::less : std::strong_ordering::greater;
  auto [x, y, point] = align_pair(a, b);
  int c = compare_magnitude(x, y);
  if (sa == Sign::Minus) c = -c;
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

NumeralState succ_ulp(const NumeralState& a) { return shift_ulp(a, +1); }
NumeralState pred_ulp(const NumeralState& a) { return shift_ulp(a, -1); }

NumeralState unit_power(int k, int ell) {
  if (ell < 0) fail(Errc::InvalidArgument, "precision exponent must be >= 0");
  Digits d(static_cast<std::size_t>(ell + 1), 0);
  d[0] = 1;
  return trim(NumeralState(k, Sign::Plus, std::move(d), ell));
}

std::uint8_t PeriodicExpansion::fraction_digit(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  if (period.empty()) return 0;
  return period[(i - preperiod.size()) % period.size()];
}

NumeralState PeriodicExpansion::truncate(int n) const {
  if (n < 0) fail(Errc::InvalidArgument, "negative truncation length");
  Digits d;
  d.reserve(static_cast<std::size_t>(n) + integer_digits.size());
  for (int i = n - 1; i >= 0; --i) d.push_back(fraction_digit(static_cast<std::size_t>(i)));
  d.insert(d.end(), integer_digits.begin(), integer_digits.end());
  if (integer_digits.empty()) d.push_back(0);
  NumeralState r(base, sign, std::move(d), n);
  if (r.is_zero()) return NumeralState(base, Sign::Plus, r.digits(), n);
  return r;
}

std::string PeriodicExpansion::to_string() const {
  std::string s;
  for (auto it = integer_digits.rbegin(); it != integer_digits.rend(); ++it) s += digit_char(*it);
  if (s.empty()) s = "0";
  s += sign_char(sign);
  for (auto d : preperiod) s += digit_char(d);
  if (!period.empty()) {
    s += '(';
    for (auto d : period) s += digit_char(d);
    s += ')';
  }
  return s;
}

PeriodicExpansion expand(const RationalValue& v, int k) {
  check_base(k);
  PeriodicExpansion e;
  e.base = k;
  e.sign = v < 0 ? Sign::Minus : Sign::Plus;
  const BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(v));
  const BigInt den = boost::multiprecision::denominator(v);
  e.integer_digits = to_digits(num / den, k);
  if (e.integer_digits.empty()) e.integer_digits.push_back(0);

  // Long division on the fractional part; a repeated remainder starts the period.
  std::map<BigInt, std::size_t> seen;
  Digits frac;
  BigInt r = num % den;
  while (r != 0 && !seen.contains(r)) {
    seen.emplace(r, frac.size());
    r *= k;
    frac.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(r / den)));
    r %= den;
  }
  if (r == 0) {
    e.preperiod = std::move(frac);
  } else {
    const auto start = static_cast<std::ptrdiff_t>(seen.at(r));
    e.preperiod.assign(frac.begin(), frac.begin() + start);
    e.period.assign(frac.begin() + start, frac.end());
  }
  return e;
}

Conversion convert_base(const NumeralState& a, int target) {
  check_base(target);
  if (target == a.base()) return trim(a);
  const RationalValue v = value(a);
  PeriodicExpansion e = expand(v, target);
  if (e.finite()) return encode(v, target);
  return e;
}

std::string format_compact(const NumeralState& a) {
  std::string s;
  s.reserve(static_cast<std::size_t>(a.length()) + 1);
  for (int j = a.length() - 1; j >= 0; --j) {
    if (j == a.point() - 1) s += sign_char(a.sign());
    s += digit_char(a.digit(j));
  }
  if (a.point() == 0) s += sign_char(a.sign());
  return s;
}

NumeralState parse_compact(std::string_view text, int k) {
  check_base(k);
  Digits left_to_right;
  int signs = 0;
  Sign sign = Sign::Plus;
  int after_sign = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    // U+2212 MINUS SIGN in UTF-8.
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      ++signs;
      sign = Sign::Minus;
      i += 2;
      continue;
    }
    if (c == '+' || c == '-') {
      ++signs;
      sign = c == '+' ? Sign::Plus : Sign::Minus;
      continue;
    }
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'Z') d = c - 'A' + 10;
    if (d < 0 || d >= k) {
      fail(Errc::ParseError, "invalid character '" + std::string(1, static_cast<char>(c)) +
                                 "' for base " + std::to_string(k) + " in '" + std::string(text) +
                                 "'");
    }
    left_to_right.push_back(static_cast<std::uint8_t>(d));
    if (signs > 0) ++after_sign;
  }
  if (signs != 1) {
    fail(Errc::ParseError, "expected exactly one sign character in '" + std::string(text) + "'");
  }
  Digits d(left_to_right.rbegin(), left_to_right.rend());
  return NumeralState(k, sign, std::move(d), after_sign);
}

}  // namespace qukit
