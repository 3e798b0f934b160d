#include "qukit/cauchy.hpp"

#include "qukit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qukit {

NumeralSequence::NumeralSequence(int k, Term term, std::optional<Modulus> modulus)
    : base_(k), term_(std::move(term)), modulus_(std::move(modulus)) {
  check_base(k);
  if (!term_) fail(Errc::InvalidArgument, "sequence needs a term generator");
}

StringSuperposition NumeralSequence::operator()(int n) const {
  StringSuperposition s = term_(n);
  if (s.base() != base_) fail(Errc::BaseMismatch, "sequence term has the wrong base");
  return s;
}

NumeralState NumeralSequence::basis_term(int n) const {
  auto b = (*this)(n).as_basis_state();
  if (!b) fail(Errc::InvalidArgument, "term " + std::to_string(n) + " is not a basis state");
  return *b;
}

namespace sequences {

namespace {

NumeralState truncate_value(const RationalValue& v, int k, int n) {
  const BigInt scale = ipow(BigInt(k), static_cast<unsigned>(n));
  const RationalValue scaled = boost::multiprecision::abs(v) * scale;
  BigInt l = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  std::vector<std::uint8_t> d;
  for (; l > 0; l /= k) d.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(l % k)));
  if (static_cast<int>(d.size()) < n + 1) d.resize(static_cast<std::size_t>(n + 1), 0);
  NumeralState r(k, v < 0 ? Sign::Minus : Sign::Plus, std::move(d), n);
  if (r.is_zero()) return NumeralState(k, Sign::Plus, r.digits(), n);
  return r;
}

}  // namespace

NumeralSequence constant(const NumeralState& a) {
  return NumeralSequence(
      a.base(), [a](int) { return StringSuperposition::basis(a); }, [](int) { return 0; });
}

NumeralSequence truncation(const RationalValue& v, int k) {
  check_base(k);
  return NumeralSequence(
      k,
      [v, k](int n) {
        if (n < 0) fail(Errc::InvalidArgument, "negative sequence index");
        return StringSuperposition::basis(truncate_value(v, k, n));
      },
      [](int ell) { return ell; });
}

NumeralSequence alternating(const NumeralState& a, const NumeralState& b) {
  if (a.base() != b.base()) fail(Errc::BaseMismatch, "alternating states have different bases");
  return NumeralSequence(a.base(), [a, b](int n) {
    return StringSuperposition::basis(n % 2 == 0 ? a : b);
  });
}

NumeralSequence superposed(std::vector<Amplitude> weights, std::vector<NumeralSequence> families) {
  if (weights.size() != families.size() || families.empty()) {
    fail(Errc::InvalidArgument, "superposed needs one weight per family");
  }
  const int k = families.front().base();
  for (const auto& f : families) {
    if (f.base() != k) fail(Errc::BaseMismatch, "superposed families have different bases");
  }
  return NumeralSequence(k, [weights = std::move(weights), families = std::move(families), k](int n) {
    StringSuperposition s(k);
    for (std::size_t i = 0; i < families.size(); ++i) s.add(families[i].basis_term(n), weights[i]);
    return s.normalized();
  });
}

NumeralSequence padded(const NumeralSequence& source, int leading, int trailing) {
  if (leading < 0 || trailing < 0) fail(Errc::InvalidArgument, "padding must be nonnegative");
  return NumeralSequence(
      source.base(),
      [source, leading, trailing](int n) {
        const StringSuperposition s = source(n);
        StringSuperposition out(s.base());
        for (const auto& [label, c] : s.terms()) {
          out.add(pad(label, label.length() + leading + trailing, label.point() + trailing), c);
        }
        return out;
      },
      source.modulus());
}

}  // namespace sequences

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::Fail: return "FAIL";
    case VerdictStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(RealProvenance p) {
  switch (p) {
    case RealProvenance::Constant: return "constant";
    case RealProvenance::Truncation: return "truncation";
    case RealProvenance::Converted: return "converted";
    case RealProvenance::Derived: return "derived";
  }
  return "derived";
}

namespace {

void check_window(int ell_max, int p_max) {
  if (ell_max < 1 || p_max < 1) fail(Errc::InvalidArgument, "ell_max and p_max must be >= 1");
}

const NumeralState& max_state(const NumeralState& a, const NumeralState& b) {
  return cmp_arith(a, b) == std::strong_ordering::less ? b : a;
}

bool within(const NumeralState& dev, const NumeralState& bound) {
  return cmp_arith(dev, bound) != std::strong_ordering::greater;
}

// tail[p] = largest deviation among the tail (p, p_max] for p = 0..p_max.
struct TailTable {
  std::vector<NumeralState> tail;
  int p_max;
};

TailTable pair_tails(const std::vector<NumeralState>& terms, int k, int p_max) {
  TailTable t{std::vector<NumeralState>(static_cast<std::size_t>(p_max + 1), NumeralState(k)), p_max};
  for (int p = p_max - 1; p >= 0; --p) {
    NumeralState m = t.tail[static_cast<std::size_t>(p + 1)];
    const int j = p + 1;
    for (int h = j + 1; h <= p_max; ++h) {
      m = max_state(m, abs_arith(sub_arith(terms[static_cast<std::size_t>(j)],
                                           terms[static_cast<std::size_t>(h)])));
    }
    t.tail[static_cast<std::size_t>(p)] = std::move(m);
  }
  return t;
}

TailTable limit_tails(const std::vector<NumeralState>& diffs, int k, int p_max) {
  TailTable t{std::vector<NumeralState>(static_cast<std::size_t>(p_max + 1), NumeralState(k)), p_max};
  for (int p = p_max - 1; p >= 0; --p) {
    t.tail[static_cast<std::size_t>(p)] =
        max_state(t.tail[static_cast<std::size_t>(p + 1)], abs_arith(diffs[static_cast<std::size_t>(p + 1)]));
  }
  return t;
}

// Smallest p whose tail satisfies the bound; p_max always does (empty tail).
int smallest_p(const TailTable& t, const NumeralState& bound) {
  int p = t.p_max;
  while (p > 0 && within(t.tail[static_cast<std::size_t>(p - 1)], bound)) --p;
  return p;
}

// Search-mode decision for one ell. `fail_p` is the smallest p that signals
// a deviation persisting to the end of the window.
EllResult search_ell(const TailTable& t, int ell, int k, int fail_p) {
  EllResult r;
  r.ell = ell;
  const NumeralState bound = unit_power(k, ell);
  const int p = smallest_p(t, bound);
  const int admissible = t.p_max / 2;
  if (p <= admissible) {
    r.p = p;
    r.status = VerdictStatus::Pass;
    r.max_deviation = value(t.tail[static_cast<std::size_t>(p)]);
  } else {
    r.status = p >= fail_p ? VerdictStatus::Fail : VerdictStatus::Inconclusive;
    r.max_deviation = value(t.tail[static_cast<std::size_t>(admissible)]);
  }
  return r;
}

CauchyVerdict assemble(std::vector<EllResult> per_ell, int ell_max, int p_max, bool declared) {
  CauchyVerdict v;
  v.ell_max = ell_max;
  v.p_max = p_max;
  v.used_declared_modulus = declared;
  v.worst_deviation = 0;
  bool all_pass = true;
  for (const auto& r : per_ell) {
    if (r.max_deviation > v.worst_deviation) v.worst_deviation = r.max_deviation;
    if (r.status == VerdictStatus::Fail && !v.failing_ell) v.failing_ell = r.ell;
    if (r.status != VerdictStatus::Pass) all_pass = false;
  }
  v.status = v.failing_ell ? VerdictStatus::Fail
                           : (all_pass ? VerdictStatus::Pass : VerdictStatus::Inconclusive);
  v.per_ell = std::move(per_ell);
  return v;
}

std::vector<NumeralState> basis_terms(const NumeralSequence& seq, int p_max) {
  std::vector<NumeralState> terms;
  terms.reserve(static_cast<std::size_t>(p_max + 1));
  for (int n = 0; n <= p_max; ++n) terms.push_back(seq.basis_term(n));
  return terms;
}

}  // namespace

CauchyVerdict cauchy_test(const NumeralSequence& seq, int ell_max, int p_max) {
  check_window(ell_max, p_max);
  const int k = seq.base();
  const auto terms = basis_terms(seq, p_max);
  const TailTable t = pair_tails(terms, k, p_max);
  std::vector<EllResult> per_ell;
  for (int ell = 1; ell <= ell_max; ++ell) {
    if (!seq.modulus()) {
      // The last pair violating means every tail contains a violation.
      per_ell.push_back(search_ell(t, ell, k, p_max - 1));
      continue;
    }
    EllResult r;
    r.ell = ell;
    const int p = std::max(0, (*seq.modulus())(ell));
    if (p >= p_max) {
      r.status = VerdictStatus::Inconclusive;
      r.max_deviation = 0;
    } else {
      r.p = p;
      const NumeralState& dev = t.tail[static_cast<std::size_t>(p)];
      r.max_deviation = value(dev);
      r.status = within(dev, unit_power(k, ell)) ? VerdictStatus::Pass : VerdictStatus::Fail;
    }
    per_ell.push_back(std::move(r));
  }
  return assemble(std::move(per_ell), ell_max, p_max, seq.modulus().has_value());
}

ProbabilityEstimate cauchy_prob(const NumeralSequence& seq, int ell_max, int p_max) {
  check_window(ell_max, p_max);
  std::vector<StringSuperposition> terms;
  terms.reserve(static_cast<std::size_t>(p_max + 1));
  for (int n = 0; n <= p_max; ++n) terms.push_back(seq(n));

  // The inf over a tail only grows with p, so the limsup over admissible p
  // is attained at the largest admissible p.
  const int p = p_max / 2;
  ProbabilityEstimate est;
  est.ell_max = ell_max;
  est.p_max = p_max;
  est.estimate = 1.0;
  for (int ell = 1; ell <= ell_max; ++ell) {
    double inf = 1.0;
    for (int j = p + 1; j <= p_max; ++j) {
      for (int h = j; h <= p_max; ++h) {
        inf = std::min(inf, prob_arith_close(terms[static_cast<std::size_t>(j)],
                                             terms[static_cast<std::size_t>(h)], ell));
      }
    }
    est.per_ell.push_back(inf);
    est.estimate = std::min(est.estimate, inf);
  }
  return est;
}

CauchyVerdict equivalent(const NumeralSequence& a, const NumeralSequence& b, int ell_max, int p_max) {
  check_window(ell_max, p_max);
  if (a.base() != b.base()) fail(Errc::BaseMismatch, "sequences have different bases");
  const int k = a.base();
  std::vector<NumeralState> diffs;
  diffs.reserve(static_cast<std::size_t>(p_max + 1));
  for (int n = 0; n <= p_max; ++n) diffs.push_back(sub_arith(a.basis_term(n), b.basis_term(n)));
  const TailTable t = limit_tails(diffs, k, p_max);
  std::vector<EllResult> per_ell;
  for (int ell = 1; ell <= ell_max; ++ell) {
    // Only the final term violating means no tail is clean.
    per_ell.push_back(search_ell(t, ell, k, p_max));
  }
  return assemble(std::move(per_ell), ell_max, p_max, false);
}

namespace {

// Sign and floor(|v| k^n) of a value.
std::pair<Sign, BigInt> truncated_digits(const RationalValue& v, int k, int n) {
  const RationalValue scaled = boost::multiprecision::abs(v) * ipow(BigInt(k), static_cast<unsigned>(n));
  BigInt l = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  return {(v < 0 && l != 0) ? Sign::Minus : Sign::Plus, l};
}

}  // namespace

NumeralState canonical(const NumeralSequence& seq, int n, int p_max) {
  if (n < 0) fail(Errc::InvalidArgument, "prefix length must be >= 0");
  check_window(1, p_max);
  const int k = seq.base();
  const int ell = n + 1;
  int p = 0;
  std::vector<NumeralState> terms;
  if (seq.modulus()) {
    p = std::max(0, (*seq.modulus())(ell));
    if (p >= p_max) {
      fail(Errc::NotCauchy, "window p_max=" + std::to_string(p_max) + " is shorter than modulus " +
                                std::to_string(p) + " for precision " + std::to_string(ell));
    }
    for (int j = 0; j <= p_max; ++j) terms.push_back(j > p ? seq.basis_term(j) : NumeralState(k));
  } else {
    terms = basis_terms(seq, p_max);
    const TailTable t = pair_tails(terms, k, p_max);
    p = smallest_p(t, unit_power(k, ell));
    if (p > p_max / 2) {
      fail(Errc::NotCauchy, "no stable tail for precision " + std::to_string(ell) + " within p_max=" +
                                std::to_string(p_max));
    }
  }
  std::optional<std::pair<Sign, BigInt>> agreed;
  for (int j = p + 1; j <= p_max; ++j) {
    auto d = truncated_digits(value(terms[static_cast<std::size_t>(j)]), k, n);
    if (!agreed) {
      agreed = d;
    } else if (*agreed != d) {
      fail(Errc::NotCauchy, "digit prefix of length " + std::to_string(n) + " not stable in window");
    }
  }
  RationalValue v(agreed->second, ipow(BigInt(k), static_cast<unsigned>(n)));
  if (agreed->first == Sign::Minus) v = -v;
  return encode(v, k);
}

RealRep::RealRep(int k, Stream stream, RealProvenance provenance)
    : base_(k), stream_(std::move(stream)), provenance_(provenance) {
  check_base(k);
}

bool is_initial_part(const NumeralState& shorter, const NumeralState& longer, int digits) {
  if (shorter.base() != longer.base()) return false;
  const int d = digits < 0 ? shorter.point() : digits;
  const int k = shorter.base();
  const RationalValue vs = value(shorter);
  const RationalValue scaled = boost::multiprecision::abs(vs) * ipow(BigInt(k), static_cast<unsigned>(d));
  if (boost::multiprecision::denominator(scaled) != 1) return false;
  auto [sign, l] = truncated_digits(value(longer), k, d);
  const Sign ss = vs < 0 ? Sign::Minus : Sign::Plus;
  return l == boost::multiprecision::numerator(scaled) && (l == 0 || sign == ss);
}

bool RealRep::check_prefix_property(int n_max) const {
  std::vector<NumeralState> p;
  for (int n = 0; n <= n_max; ++n) p.push_back(prefix(n));
  for (int n = 0; n <= n_max; ++n) {
    for (int n2 = n + 1; n2 <= n_max; ++n2) {
      if (!is_initial_part(p[static_cast<std::size_t>(n)], p[static_cast<std::size_t>(n2)], n)) return false;
    }
  }
  return true;
}

RealRep RealRep::from_expansion(PeriodicExpansion e, RealProvenance provenance) {
  const int k = e.base;
  return RealRep(k, [e = std::move(e)](int n) { return e.truncate(n); }, provenance);
}

ComplexRep::ComplexRep(RealRep r, RealRep i) : re(std::move(r)), im(std::move(i)) {
  if (re.base() != im.base()) fail(Errc::BaseMismatch, "complex parts have different bases");
}

RealRep real_from_numeral(const NumeralState& a) {
  return RealRep::from_expansion(expand(value(a), a.base()), RealProvenance::Constant);
}

ComplexRep complex_from_pair(const ComplexNumeral& p) {
  return ComplexRep(real_from_numeral(p.re), real_from_numeral(p.im));
}

RealRep real_convert_base(const NumeralState& a, int target) {
  PeriodicExpansion e = expand(value(a), target);
  const auto prov = e.finite() ? RealProvenance::Constant : RealProvenance::Converted;
  return RealRep::from_expansion(std::move(e), prov);
}

RealRep real_from_sequence(const NumeralSequence& seq, int p_max) {
  return RealRep(
      seq.base(),
      [seq, p_max](int n) {
        const NumeralState c = canonical(seq, n, p_max);
        return pad(c, c.length() - c.point() + n, n);
      },
      RealProvenance::Derived);
}

}  // namespace qukit
