#pragma once

#include "oracle.hpp"

#include "qukit/errors.hpp"
#include "qukit/numeral.hpp"

#include <doctest.h>

namespace testing {

inline qukit::NumeralState make(const oracle::RawState& r) {
  return qukit::NumeralState(r.k, r.negative ? qukit::Sign::Minus : qukit::Sign::Plus, r.digits, r.m);
}

inline oracle::Frac frac(const qukit::RationalValue& v) {
  return oracle::Frac(boost::multiprecision::numerator(v).convert_to<long long>(),
                      boost::multiprecision::denominator(v).convert_to<long long>());
}

inline qukit::NumeralState parse(const char* text, int k) { return qukit::parse_compact(text, k); }

/// Error code of the exception thrown by f, or nullopt.
template <class F>
std::optional<qukit::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const qukit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testing

#define CHECK_ERRC(expr, code) CHECK(testing::error_of([&] { (void)(expr); }) == std::optional<qukit::Errc>(code))
