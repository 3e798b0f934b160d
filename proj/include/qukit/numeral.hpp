#pragma once

#include "qukit/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qukit {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

enum class Sign : std::uint8_t { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// One basis state |gamma, s> of a base-k qukit string with the sign qubit
/// (and k-al point) at position m counted from the right end.
///
/// Digits are stored least significant first: digit(0) is the rightmost
/// qukit, so the encoded value is gamma * sum_j digit(j) k^j * k^-m.
///
/// Two states compare equal only when every label (k, sign, L, m, digits)
/// matches; arithmetically equal states with different padding are distinct.
class NumeralState {
 public:
  /// Zero state with L = 1, m = 0 in base k.
  explicit NumeralState(int k = 2);

  /// Validates digit range, 0 <= m <= L and the base bounds.
  NumeralState(int k, Sign sign, std::vector<std::uint8_t> digits, int point);

  /// Integer-valued state (m = 0) with the given little-endian digits.
  static NumeralState integer(int k, Sign sign, std::vector<std::uint8_t> digits) {
    return NumeralState(k, sign, std::move(digits), 0);
  }

  int base() const noexcept { return base_; }
  Sign sign() const noexcept { return sign_; }
  int point() const noexcept { return point_; }
  int length() const noexcept { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::uint8_t digit(int j) const { return digits_.at(static_cast<std::size_t>(j)); }

  /// True when every digit is zero (including L = 0).
  bool is_zero() const noexcept;

  friend bool operator==(const NumeralState&, const NumeralState&) = default;
  friend std::strong_ordering operator<=>(const NumeralState&, const NumeralState&) = default;

 private:
  int base_;
  Sign sign_;
  int point_;
  std::vector<std::uint8_t> digits_;
};

/// Real and imaginary parts sharing one base.
struct ComplexNumeral {
  NumeralState re;
  NumeralState im;

  ComplexNumeral(NumeralState r, NumeralState i);
};

/// Eventually periodic base-k expansion of a rational that has no finite
/// base-k representation (or a finite one, in which case `period` is empty).
///
/// `integer_digits` is least significant first, matching NumeralState.
/// `preperiod` and `period` are in reading order: element 0 is the first
/// digit after the k-al point.
struct PeriodicExpansion {
  int base = 10;
  Sign sign = Sign::Plus;
  std::vector<std::uint8_t> integer_digits;
  std::vector<std::uint8_t> preperiod;
  std::vector<std::uint8_t> period;

  bool finite() const noexcept { return period.empty(); }

  /// Fractional digit at position i (0 = first after the point).
  std::uint8_t fraction_digit(std::size_t i) const;

  /// State with exactly n fractional digits (m = n), truncated toward zero.
  NumeralState truncate(int n) const;

  /// Compact-style rendering with the period in parentheses, e.g. "0+1(6)".
  std::string to_string() const;

  friend bool operator==(const PeriodicExpansion&, const PeriodicExpansion&) = default;
};

/// Exact value gamma * l * k^-m in lowest terms.
RationalValue value(const NumeralState& a);

/// Trimmed state whose value is v. Throws NotRepresentable when the
/// denominator of v has a prime factor not dividing k.
NumeralState encode(const RationalValue& v, int k);

/// Removes fractional trailing zeros and leading zeros above the units
/// position. Any zero-valued state becomes "0+" (one zero digit, m = 0, +).
NumeralState trim(const NumeralState& a);

/// Arithmetically equal state with length L and point m. Throws CannotAlign
/// if that shape cannot hold the value.
NumeralState pad(const NumeralState& a, int length, int point);

bool eq_arith(const NumeralState& a, const NumeralState& b);

NumeralState add_arith(const NumeralState& a, const NumeralState& b);
NumeralState sub_arith(const NumeralState& a, const NumeralState& b);
NumeralState abs_arith(const NumeralState& a);
std::strong_ordering cmp_arith(const NumeralState& a, const NumeralState& b);

/// Shift by exactly one unit in the last place (+-k^-m) of the untrimmed
/// operand. L and m are kept; a carry out of the top digit grows L.
NumeralState succ_ulp(const NumeralState& a);
NumeralState pred_ulp(const NumeralState& a);

/// State |+, -ell> = k^-ell (trimmed).
NumeralState unit_power(int k, int ell);

using Conversion = std::variant<NumeralState, PeriodicExpansion>;

/// Finite trimmed state when value(a) is representable in base `target`,
/// otherwise the periodic expansion found by remainder-cycle detection.
Conversion convert_base(const NumeralState& a, int target);

/// Expansion of an arbitrary rational in base k (finite or periodic).
PeriodicExpansion expand(const RationalValue& v, int k);

std::string format_compact(const NumeralState& a);
NumeralState parse_compact(std::string_view text, int k);

void check_base(int k);

}  // namespace qukit
