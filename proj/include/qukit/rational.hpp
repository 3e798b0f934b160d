#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qukit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with a positive denominator.
using RationalValue = boost::multiprecision::cpp_rational;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const RationalValue& v);

/// Accepts "n", "-n", "n/d" and finite decimal literals such as "-12.71".
RationalValue parse_rational(const std::string& text);

double to_double(const RationalValue& v);

BigInt ipow(const BigInt& base, unsigned exp);

/// True when every prime factor of `n` (n >= 1) divides `k`.
bool primes_divide(BigInt n, const BigInt& k);

}  // namespace qukit
