#include "helpers.hpp"

#include "qukit/cauchy.hpp"

#include <doctest.h>

#include <cmath>

using namespace qukit;
using testing::frac;
using testing::parse;

namespace {

NumeralSequence third() { return sequences::truncation(parse_rational("1/3"), 2); }

// Alternates a/b for n < switch_at, constant a afterwards; no modulus.
NumeralSequence settles_late(int switch_at) {
  const NumeralState a = parse("0+", 2), b = parse("1+", 2);
  return NumeralSequence(2, [=](int n) { return StringSuperposition::basis(n < switch_at && n % 2 ? b : a); });
}

// 1/4 pair of the spec's superposition example: t_n = 0, u_n alternating 1, 2.
NumeralSequence mixed() {
  const auto t = sequences::constant(parse("0+", 2));
  const auto u = sequences::alternating(parse("1+", 2), parse("10+", 2));
  return sequences::superposed({Amplitude(1.0 / std::sqrt(2.0)), Amplitude(1.0 / std::sqrt(2.0))}, {t, u});
}

// Brute-force product measure over the components of two superpositions.
double brute_close(const StringSuperposition& a, const StringSuperposition& b, int k, int ell) {
  double p = 0;
  const oracle::Frac bound(1, oracle::ipow(k, ell));
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      if ((frac(value(x)) - frac(value(y))).abs() <= bound) p += std::norm(cx) * std::norm(cy);
    }
  }
  return p;
}

}  // namespace

TEST_SUITE("cauchy") {

TEST_CASE("cauchy_test examples") {
  const CauchyVerdict v = cauchy_test(third(), 8, 32);
  CHECK(v.status == VerdictStatus::Pass);
  CHECK(v.used_declared_modulus);
  REQUIRE(v.per_ell.size() == 8);
  for (const auto& e : v.per_ell) CHECK(e.p == e.ell);

  const CauchyVerdict c = cauchy_test(sequences::constant(parse("13-47", 10)), 8, 32);
  CHECK(c.status == VerdictStatus::Pass);
  CHECK(c.worst_deviation == 0);

  const CauchyVerdict alt = cauchy_test(sequences::alternating(parse("0+", 2), parse("1+", 2)), 8, 32);
  CHECK(alt.status == VerdictStatus::Fail);
  CHECK(alt.failing_ell == 1);
  CHECK(alt.per_ell[0].max_deviation == 1);
}

TEST_CASE("cauchy_test three-valued outcomes") {
  // Settles at 19: no admissible tail (p <= 16) but later tails are clean.
  CHECK(cauchy_test(settles_late(20), 4, 32).status == VerdictStatus::Inconclusive);
  CHECK(cauchy_test(settles_late(10), 4, 32).status == VerdictStatus::Pass);
  CHECK(cauchy_test(settles_late(40), 4, 32).status == VerdictStatus::Fail);

  // A declared modulus that the terms break.
  const NumeralSequence liar(2, [](int n) { return StringSuperposition::basis(parse(n % 2 ? "1+" : "0+", 2)); },
                             [](int) { return 3; });
  const CauchyVerdict v = cauchy_test(liar, 3, 32);
  CHECK(v.status == VerdictStatus::Fail);
  CHECK(v.used_declared_modulus);

  // Modulus beyond the window.
  const NumeralSequence slow(2, [](int) { return StringSuperposition::basis(parse("1+", 2)); },
                             [](int ell) { return 10 * ell; });
  CHECK(cauchy_test(slow, 4, 32).status == VerdictStatus::Inconclusive);

  CHECK_ERRC(cauchy_test(third(), 0, 32), Errc::InvalidArgument);
}

TEST_CASE("cauchy_prob examples") {
  CHECK(cauchy_prob(third(), 8, 32).estimate == 1.0);
  const ProbabilityEstimate m = cauchy_prob(mixed(), 4, 16);
  CHECK(std::abs(m.estimate - 0.25) <= 1e-12);
  CHECK(cauchy_prob(sequences::alternating(parse("0+", 2), parse("1+", 2)), 4, 16).estimate == 0.0);
}

TEST_CASE("cauchy_prob matches a brute-force product-measure evaluation") {
  const NumeralSequence s = mixed();
  const int ell_max = 4, p_max = 16;
  double best = 1.0;
  for (int ell = 1; ell <= ell_max; ++ell) {
    double inf = 1.0;
    for (int j = p_max / 2 + 1; j <= p_max; ++j) {
      for (int h = p_max / 2 + 1; h <= p_max; ++h) inf = std::min(inf, brute_close(s(j), s(h), 2, ell));
    }
    best = std::min(best, inf);
  }
  CHECK(std::abs(cauchy_prob(s, ell_max, p_max).estimate - best) <= 1e-12);
}

TEST_CASE("cauchy_prob of basis sequences agrees with cauchy_test") {
  std::vector<NumeralSequence> seqs{third(), sequences::truncation(parse_rational("-5/7"), 3),
                                    sequences::constant(parse("1-1", 2)), settles_late(6), settles_late(40),
                                    sequences::alternating(parse("0+", 2), parse("1+", 2))};
  for (const auto& s : seqs) {
    const bool pass = cauchy_test(s, 4, 32).status == VerdictStatus::Pass;
    const double p = cauchy_prob(s, 4, 32).estimate;
    CHECK((p == 1.0) == pass);
    CHECK((p == 0.0) == !pass);
  }
}

TEST_CASE("equivalent") {
  const CauchyVerdict self = equivalent(third(), third(), 8, 32);
  CHECK(self.status == VerdictStatus::Pass);
  CHECK(self.worst_deviation == 0);
  CHECK(equivalent(third(), sequences::padded(third(), 1, 1), 8, 32).status == VerdictStatus::Pass);

  // The difference stays near 1/3: inside 2^-1, outside 2^-2.
  const CauchyVerdict zero = equivalent(third(), sequences::constant(parse("0+", 2)), 3, 32);
  CHECK(zero.status == VerdictStatus::Fail);
  CHECK(zero.failing_ell == 2);
  CHECK(zero.per_ell[0].status == VerdictStatus::Pass);

  CHECK_ERRC(equivalent(third(), sequences::constant(parse("0+", 3)), 3, 32), Errc::BaseMismatch);
}

TEST_CASE("equivalent is reflexive and symmetric") {
  std::vector<NumeralSequence> seqs{third(), sequences::padded(third(), 2, 0),
                                    sequences::truncation(parse_rational("1/3"), 2),
                                    sequences::truncation(parse_rational("11/32"), 2),
                                    sequences::constant(parse("0+0101", 2))};
  for (const auto& a : seqs) {
    CHECK(equivalent(a, a, 6, 32).status == VerdictStatus::Pass);
    for (const auto& b : seqs) CHECK(equivalent(a, b, 6, 32).status == equivalent(b, a, 6, 32).status);
  }
}

TEST_CASE("canonical examples") {
  CHECK(format_compact(canonical(sequences::constant(parse("13-47", 10)), 4)) == "13-47");
  CHECK(format_compact(canonical(third(), 6)) == "0+010101");
  CHECK_ERRC(canonical(sequences::alternating(parse("0+", 2), parse("1+", 2)), 3), Errc::NotCauchy);
  CHECK_ERRC(canonical(third(), 40, 32), Errc::NotCauchy);
  CHECK(format_compact(canonical(sequences::truncation(parse_rational("-2/3"), 10), 3)) == "0-666");
}

TEST_CASE("canonical prefixes are initial parts and approach the limit") {
  struct Case {
    const char* v;
    int k;
  };
  for (const Case c : {Case{"1/3", 2}, Case{"2/7", 3}, Case{"5/8", 10}, Case{"-13/6", 10}}) {
    const auto seq = sequences::truncation(parse_rational(c.v), c.k);
    const oracle::Frac limit = frac(parse_rational(c.v));
    std::vector<NumeralState> out;
    for (int n = 0; n <= 16; ++n) out.push_back(canonical(seq, n, 40));
    for (int n = 0; n <= 16; ++n) {
      for (int n2 = n + 1; n2 <= 16; ++n2) REQUIRE(is_initial_part(out[n], out[n2], n));
      REQUIRE((frac(value(out[n])) - limit).abs() <= oracle::Frac(c.k, oracle::ipow(c.k, n)));
    }
    const RealRep r = real_from_sequence(seq, 40);
    CHECK(r.provenance() == RealProvenance::Derived);
    CHECK(r.check_prefix_property(12));
    CHECK(r.prefix(5).point() == 5);
  }
}

TEST_CASE("superposed classes add no new reals") {
  // Each term mixes two paddings of the same truncation: arithmetically one
  // value, so every branch has the same canonical stream.
  const auto a = third();
  const auto b = sequences::padded(third(), 1, 2);
  const auto s = sequences::superposed({Amplitude(0.6), Amplitude(0.0, 0.8)}, {a, b});
  CHECK(cauchy_prob(s, 6, 32).estimate == 1.0);
  CHECK(equivalent(a, b, 6, 32).status == VerdictStatus::Pass);
  for (int n = 0; n <= 12; ++n) CHECK(canonical(a, n) == canonical(b, n));
}

TEST_CASE("real representations") {
  const RealRep r = real_from_numeral(parse("13-47", 10));
  CHECK(r.provenance() == RealProvenance::Constant);
  CHECK(r.check_prefix_property(8));
  CHECK(format_compact(r.prefix(4)) == "13-4700");
  CHECK(frac(value(r.prefix(2))) == oracle::Frac(-1347, 100));

  const RealRep z = real_from_numeral(parse("0+", 2));
  for (int n = 0; n < 6; ++n) CHECK(z.prefix(n).is_zero());

  const ComplexRep c = complex_from_pair(ComplexNumeral(parse("1+", 2), parse("0+1", 2)));
  CHECK(frac(value(c.re.prefix(3))) == oracle::Frac(1));
  CHECK(frac(value(c.im.prefix(3))) == oracle::Frac(1, 2));
  CHECK_ERRC(ComplexNumeral(parse("1+", 2), parse("1+", 3)), Errc::BaseMismatch);
}

TEST_CASE("real_convert_base") {
  const RealRep sixth = real_convert_base(parse("0+1", 6), 10);
  CHECK(sixth.provenance() == RealProvenance::Converted);
  CHECK(format_compact(sixth.prefix(4)) == "0+1666");
  CHECK(sixth.check_prefix_property(10));

  const NumeralState a = parse("012+10", 3);
  const RealRep same = real_convert_base(a, 3);
  CHECK(same.provenance() == RealProvenance::Constant);
  CHECK(trim(same.prefix(6)) == trim(a));

  const RealRep half = real_convert_base(parse("0+1", 2), 10);
  CHECK(half.provenance() == RealProvenance::Constant);
  CHECK(format_compact(half.prefix(4)) == "0+5000");

  // n-digit prefix within target^-n of the value.
  for (int n = 0; n <= 10; ++n) {
    const auto d = (frac(value(sixth.prefix(n))) - oracle::Frac(1, 6)).abs();
    CHECK(d <= oracle::Frac(1, oracle::ipow(10, n)));
  }
}

TEST_CASE("sequence families") {
  CHECK(format_compact(third().basis_term(4)) == "0+0101");
  CHECK(format_compact(sequences::padded(third(), 1, 1).basis_term(2)) == "00+010");
  CHECK(third().modulus().has_value());
  CHECK_FALSE(sequences::alternating(parse("0+", 2), parse("1+", 2)).modulus().has_value());
  CHECK_ERRC(mixed().basis_term(3), Errc::InvalidArgument);
  CHECK_ERRC(sequences::superposed({Amplitude(1)}, {}), Errc::InvalidArgument);
  CHECK(mixed()(3).norm2() == doctest::Approx(1.0));
}

}  // TEST_SUITE
