#include "helpers.hpp"

#include "qukit/numeral.hpp"

#include <doctest.h>

using namespace qukit;
using testing::frac;
using testing::make;
using testing::parse;

TEST_SUITE("numeral") {

TEST_CASE("value of compact literals") {
  CHECK(to_string(value(parse("3720+", 10))) == "3720");
  CHECK(to_string(value(parse("12-71", 10))) == "-1271/100");
  CHECK(to_string(value(parse("0+", 2))) == "0");
  CHECK(to_string(value(parse("-0474", 10))) == "-237/5000");
  CHECK(to_string(value(NumeralState(2, Sign::Plus, {}, 0))) == "0");
}

TEST_CASE("encode") {
  CHECK(format_compact(encode(RationalValue(3720), 10)) == "3720+");
  for (int k : {2, 3, 10, 36}) {
    const NumeralState z = encode(RationalValue(0), k);
    CHECK(z.length() == 1);
    CHECK(z.point() == 0);
    CHECK(z.sign() == Sign::Plus);
  }
  CHECK_ERRC(encode(parse_rational("1/6"), 10), Errc::NotRepresentable);
  CHECK(format_compact(encode(parse_rational("-1271/100"), 10)) == "12-71");
  CHECK(format_compact(encode(parse_rational("1/2"), 10)) == "0+5");
  CHECK(format_compact(encode(parse_rational("3/4"), 2)) == "0+11");
}

TEST_CASE("trim") {
  CHECK(format_compact(trim(parse("013-470", 10))) == "13-47");
  CHECK(format_compact(trim(parse("13-47", 10))) == "13-47");
  const NumeralState z = trim(parse("-000", 10));
  CHECK(format_compact(z) == "0+");
  CHECK(z.sign() == Sign::Plus);
  CHECK(format_compact(trim(parse("000+500", 10))) == "0+5");
  CHECK(format_compact(trim(parse("00100+", 2))) == "100+");
}

TEST_CASE("pad") {
  CHECK(format_compact(pad(parse("13-47", 10), 6, 3)) == "013-470");
  CHECK(format_compact(pad(parse("0+", 2), 1, 0)) == "0+");
  CHECK(format_compact(pad(parse("1+", 2), 3, 1)) == "01+0");
  CHECK_ERRC(pad(parse("13-47", 10), 6, 1), Errc::CannotAlign);
  CHECK_ERRC(pad(parse("13-47", 10), 3, 2), Errc::CannotAlign);
}

TEST_CASE("eq_arith") {
  CHECK(eq_arith(parse("013-470", 10), parse("13-47", 10)));
  const NumeralState a = parse("12-71", 10);
  CHECK(eq_arith(a, a));
  CHECK_FALSE(eq_arith(parse("1+", 2), parse("10+", 2)));
  CHECK(eq_arith(parse("0+", 2), parse("-00", 2)));
  CHECK_ERRC(eq_arith(parse("1+", 2), parse("1+", 3)), Errc::BaseMismatch);
}

TEST_CASE("arithmetic examples") {
  CHECK(format_compact(sub_arith(parse("013-470", 10), parse("13-47", 10))) == "0+");
  CHECK(format_compact(add_arith(parse("12+", 3), parse("2+", 3))) == "21+");
  CHECK(format_compact(abs_arith(parse("12-71", 10))) == "12+71");
  CHECK(format_compact(add_arith(parse("0+1", 2), parse("0+1", 2))) == "1+");
  CHECK(format_compact(sub_arith(parse("1+", 10), parse("2+5", 10))) == "1-5");
  CHECK(cmp_arith(parse("12-71", 10), parse("0+", 10)) < 0);
  CHECK(cmp_arith(parse("013-470", 10), parse("13-47", 10)) == 0);
  CHECK_ERRC(add_arith(parse("1+", 2), parse("1+", 3)), Errc::BaseMismatch);
}

TEST_CASE("successor and predecessor") {
  const NumeralState s = succ_ulp(parse("100+111", 2));
  CHECK(format_compact(s) == "101+000");
  CHECK(s.length() == 6);
  CHECK(s.point() == 3);
  CHECK(format_compact(succ_ulp(parse("2+", 3))) == "10+");
  CHECK(format_compact(pred_ulp(parse("101+000", 2))) == "100+111");
  CHECK(format_compact(pred_ulp(parse("00+", 2))) == "01-");
  CHECK(format_compact(succ_ulp(parse("01-", 2))) == "00+");
  CHECK(format_compact(succ_ulp(parse("-11", 2))) == "-10");
  CHECK(format_compact(succ_ulp(parse("+11", 2))) == "1+00");
}

TEST_CASE("convert_base") {
  const Conversion c = convert_base(parse("0+1", 6), 10);
  REQUIRE(std::holds_alternative<PeriodicExpansion>(c));
  const auto& e = std::get<PeriodicExpansion>(c);
  CHECK(e.integer_digits == std::vector<std::uint8_t>{0});
  CHECK(e.preperiod == std::vector<std::uint8_t>{1});
  CHECK(e.period == std::vector<std::uint8_t>{6});
  CHECK(e.to_string() == "0+1(6)");

  const NumeralState a = parse("0130+20", 10);
  const Conversion same = convert_base(a, 10);
  REQUIRE(std::holds_alternative<NumeralState>(same));
  CHECK(std::get<NumeralState>(same) == trim(a));

  const Conversion half = convert_base(parse("0+1", 2), 10);
  REQUIRE(std::holds_alternative<NumeralState>(half));
  CHECK(format_compact(std::get<NumeralState>(half)) == "0+5");

  const PeriodicExpansion third = expand(parse_rational("-7/3"), 10);
  CHECK(third.sign == Sign::Minus);
  CHECK(third.to_string() == "2-(3)");
  CHECK(format_compact(third.truncate(4)) == "2-3333");
}

TEST_CASE("compact format and parse") {
  CHECK(format_compact(NumeralState(10, Sign::Minus, {1, 7, 2, 1}, 2)) == "12-71");
  const NumeralState p = parse("3720+", 10);
  CHECK(p.digits() == std::vector<std::uint8_t>{0, 2, 7, 3});
  CHECK(p.point() == 0);
  CHECK(p.sign() == Sign::Plus);
  const NumeralState q = parse("-0474", 10);
  CHECK(q.point() == 4);
  CHECK(q.length() == 4);
  CHECK_ERRC(parse("12-71", 2), Errc::ParseError);
  CHECK_ERRC(parse("1271", 10), Errc::ParseError);
  CHECK_ERRC(parse("1+2-", 10), Errc::ParseError);
  CHECK_ERRC(parse("1x+", 10), Errc::ParseError);
  CHECK(parse("12\xE2\x88\x92" "71", 10) == parse("12-71", 10));
  CHECK(format_compact(parse("z+Z", 36)) == "z+z");
  CHECK(format_compact(NumeralState(2, Sign::Plus, {}, 0)) == "+");
}

TEST_CASE("invalid states are rejected") {
  CHECK_ERRC(NumeralState(1), Errc::InvalidArgument);
  CHECK_ERRC(NumeralState(37), Errc::InvalidArgument);
  CHECK_ERRC(NumeralState(2, Sign::Plus, {2}, 0), Errc::InvalidArgument);
  CHECK_ERRC(NumeralState(2, Sign::Plus, {1}, 2), Errc::InvalidArgument);
}

// ---------------------------------------------------------------------------
// Properties against the brute-force oracle
// ---------------------------------------------------------------------------

TEST_CASE("round trip and value oracle, k in {2,3}, L <= 6") {
  for (int k : {2, 3}) {
    std::size_t n = 0;
    oracle::for_each_state(k, 6, [&](const oracle::RawState& r) {
      const NumeralState a = make(r);
      const std::string text = format_compact(a);
      REQUIRE(text.size() == static_cast<std::size_t>(a.length() + 1));
      REQUIRE(text[static_cast<std::size_t>(a.length() - a.point())] == sign_char(a.sign()));
      const NumeralState back = parse_compact(text, k);
      REQUIRE(back == a);
      REQUIRE(frac(value(back)) == oracle::value(k, r.negative, r.digits, r.m));
      ++n;
    });
    CHECK(n > 0);
  }
}

TEST_CASE("trim, encode and pad properties") {
  for (int k : {2, 3}) {
    oracle::for_each_state(k, 5, [&](const oracle::RawState& r) {
      const NumeralState a = make(r);
      const NumeralState t = trim(a);
      REQUIRE(trim(t) == t);
      REQUIRE(eq_arith(a, t));
      REQUIRE(encode(value(a), k) == t);
      if (t.is_zero()) {
        REQUIRE(format_compact(t) == "0+");
      } else {
        if (t.point() > 0) REQUIRE(t.digit(0) != 0);
        REQUIRE(t.length() >= t.point() + 1);
        if (t.length() > t.point() + 1) REQUIRE(t.digit(t.length() - 1) != 0);
      }
      if (a.length() > 0) REQUIRE(pad(t, a.length(), a.point()) == (a.is_zero() ? NumeralState(k, Sign::Plus, a.digits(), a.point()) : a));
    });
  }
}

TEST_CASE("arithmetic agrees with the oracle, exhaustive pairs k in {2,3}, L <= 3") {
  for (int k : {2, 3}) {
    std::vector<std::pair<NumeralState, oracle::Frac>> states;
    oracle::for_each_state(k, 3, [&](const oracle::RawState& r) {
      states.emplace_back(make(r), oracle::value(k, r.negative, r.digits, r.m));
    });
    for (const auto& [a, va] : states) {
      REQUIRE(frac(value(abs_arith(a))) == va.abs());
      REQUIRE(trim(abs_arith(a)) == abs_arith(a));
      for (const auto& [b, vb] : states) {
        const NumeralState s = add_arith(a, b);
        const NumeralState d = sub_arith(a, b);
        REQUIRE(frac(value(s)) == va + vb);
        REQUIRE(frac(value(d)) == va - vb);
        REQUIRE(trim(s) == s);
        REQUIRE(trim(d) == d);
        const auto c = cmp_arith(a, b);
        REQUIRE((c < 0) == (va < vb));
        REQUIRE((c == 0) == (va == vb));
        REQUIRE(eq_arith(a, b) == (va == vb));
      }
    }
  }
}

TEST_CASE("arithmetic agrees with the oracle, k = 10, L <= 4 against a sample") {
  std::vector<std::pair<NumeralState, oracle::Frac>> all;
  oracle::for_each_state(10, 4, [&](const oracle::RawState& r) {
    all.emplace_back(make(r), oracle::value(10, r.negative, r.digits, r.m));
  });
  std::vector<std::pair<NumeralState, oracle::Frac>> sample;
  for (std::size_t i = 0; i < all.size(); i += 9973) sample.push_back(all[i]);
  for (const auto& [a, va] : all) {
    REQUIRE(frac(value(abs_arith(a))) == va.abs());
    for (const auto& [b, vb] : sample) {
      REQUIRE(frac(value(add_arith(a, b))) == va + vb);
      REQUIRE(frac(value(sub_arith(b, a))) == vb - va);
      REQUIRE((cmp_arith(a, b) < 0) == (va < vb));
    }
  }
}

TEST_CASE("eq_arith is an equivalence relation") {
  std::vector<NumeralState> s;
  oracle::for_each_state(2, 3, [&](const oracle::RawState& r) { s.push_back(make(r)); });
  for (const auto& a : s) {
    REQUIRE(eq_arith(a, a));
    for (const auto& b : s) {
      REQUIRE(eq_arith(a, b) == eq_arith(b, a));
      if (!eq_arith(a, b)) continue;
      for (const auto& c : s) {
        if (eq_arith(b, c)) REQUIRE(eq_arith(a, c));
      }
    }
  }
}

TEST_CASE("successor shifts by one ulp and inverts the predecessor") {
  for (int k : {2, 3, 10}) {
    oracle::for_each_state(k, k == 10 ? 3 : 5, [&](const oracle::RawState& r) {
      const NumeralState a = make(r);
      const oracle::Frac ulp(1, oracle::ipow(k, a.point()));
      const oracle::Frac va = oracle::value(k, r.negative, r.digits, r.m);
      const NumeralState s = succ_ulp(a);
      const NumeralState p = pred_ulp(a);
      REQUIRE(frac(value(s)) == va + ulp);
      REQUIRE(frac(value(p)) == va - ulp);
      REQUIRE(s.point() == a.point());
      REQUIRE(s.length() >= a.length());
      REQUIRE(s.length() <= a.length() + 1);
      REQUIRE(eq_arith(pred_ulp(s), a));
      REQUIRE(eq_arith(succ_ulp(p), a));
    });
  }
}

TEST_CASE("convert_base matches number-theoretic expansion lengths and digits") {
  std::vector<oracle::Frac> values;
  for (int d = 1; d <= 40; ++d) {
    for (int n = -2 * d; n <= 2 * d; n += 3) values.emplace_back(n, d);
  }
  for (int target = 2; target <= 12; ++target) {
    for (const auto& v : values) {
      const PeriodicExpansion e = expand(RationalValue(static_cast<long long>(v.n), static_cast<long long>(v.d)), target);
      const auto [pre, period] = oracle::expansion_lengths(v, target);
      REQUIRE(e.finite() == oracle::finite_in_base(v, target));
      REQUIRE(static_cast<int>(e.period.size()) == period);
      REQUIRE(static_cast<int>(e.preperiod.size()) == pre);
      for (int i = 0; i < 24; ++i) {
        REQUIRE(e.fraction_digit(static_cast<std::size_t>(i)) == oracle::fraction_digit(v, target, i));
      }
      // n-digit truncation lies within target^-n of the value.
      for (int n = 0; n <= 8; ++n) {
        const oracle::Frac t = frac(value(e.truncate(n)));
        REQUIRE((v - t).abs() <= oracle::Frac(1, oracle::ipow(target, n)));
      }
    }
  }
}

}  // TEST_SUITE
