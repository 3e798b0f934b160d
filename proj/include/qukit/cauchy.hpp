#pragma once

#include "qukit/numeral.hpp"
#include "qukit/superposition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qukit {

/// Index map n -> term. Terms must be a pure function of n.
class NumeralSequence {
 public:
  using Term = std::function<StringSuperposition(int)>;
  /// Claimed modulus: for every ell, all terms past modulus(ell) lie within
  /// k^-ell of each other.
  using Modulus = std::function<int(int)>;

  NumeralSequence(int k, Term term, std::optional<Modulus> modulus = {});

  int base() const noexcept { return base_; }
  StringSuperposition operator()(int n) const;

  /// The term at n as a single basis state; InvalidArgument otherwise.
  NumeralState basis_term(int n) const;

  const std::optional<Modulus>& modulus() const noexcept { return modulus_; }

 private:
  int base_;
  Term term_;
  std::optional<Modulus> modulus_;
};

namespace sequences {

/// psi(n) = a for all n; modulus 0.
NumeralSequence constant(const NumeralState& a);

/// psi(n) = v truncated toward zero to n base-k fractional digits (m = n);
/// modulus ell.
NumeralSequence truncation(const RationalValue& v, int k);

/// psi(n) = a for even n, b for odd n; no declared modulus.
NumeralSequence alternating(const NumeralState& a, const NumeralState& b);

/// psi(n) = normalized sum_i w_i |family_i(n)>. Families must emit basis
/// states; coinciding labels add amplitudes.
NumeralSequence superposed(std::vector<Amplitude> weights, std::vector<NumeralSequence> families);

/// Every basis term padded with `leading` extra high zeros and `trailing`
/// extra low fractional zeros. Keeps the source modulus.
NumeralSequence padded(const NumeralSequence& source, int leading, int trailing);

}  // namespace sequences

enum class VerdictStatus { Pass, Fail, Inconclusive };

std::string to_string(VerdictStatus s);

/// Result for one precision exponent.
struct EllResult {
  int ell = 0;
  /// Smallest p (or the declared modulus) whose tail satisfied the bound.
  std::optional<int> p;
  /// Largest deviation seen among tail pairs of the p actually checked
  /// (the last admissible p when no p worked).
  RationalValue max_deviation;
  VerdictStatus status = VerdictStatus::Inconclusive;
};

/// Finite-window reading of the Cauchy condition.
///
/// The tail (p, p_max] of a window is admissible when p <= p_max / 2, so at
/// least half of the window takes part in every decision.
struct CauchyVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  int ell_max = 0;
  int p_max = 0;
  bool used_declared_modulus = false;
  std::optional<int> failing_ell;
  RationalValue worst_deviation;
  std::vector<EllResult> per_ell;
};

/// Checks |psi(j) - psi(h)| <= k^-ell for j, h in (p, p_max], ell = 1..ell_max.
/// With a declared modulus the tail starts at modulus(ell) and any violation
/// is a FAIL. Otherwise the smallest admissible p is searched; a violation
/// between the last two terms (no p works at all) is a FAIL, an admissible
/// p missing but later p working is INCONCLUSIVE.
CauchyVerdict cauchy_test(const NumeralSequence& seq, int ell_max, int p_max);

struct ProbabilityEstimate {
  double estimate = 0;
  int ell_max = 0;
  int p_max = 0;
  /// inf over tail pairs at p = p_max / 2, for each ell.
  std::vector<double> per_ell;
};

/// Truncated liminf_ell limsup_p inf_{j,h>p} P_{j,h,ell}.
ProbabilityEstimate cauchy_prob(const NumeralSequence& seq, int ell_max, int p_max);

/// Tests that the termwise difference seq1(n) - seq2(n) converges to 0 with
/// the same window rules as cauchy_test (search mode).
CauchyVerdict equivalent(const NumeralSequence& a, const NumeralSequence& b, int ell_max, int p_max);

/// The n-fractional-digit prefix of the canonical representative, trimmed.
/// Digits are read off terms past the modulus for precision n + 1 (declared,
/// or searched within the window) and must agree; otherwise NotCauchy.
NumeralState canonical(const NumeralSequence& seq, int n, int p_max = 64);

enum class RealProvenance { Constant, Truncation, Converted, Derived };

std::string to_string(RealProvenance p);

/// Canonical digit-stream representative of a real number in base k.
/// prefix(n) has exactly n fractional digits and is an initial part of
/// prefix(n') for n < n'.
class RealRep {
 public:
  using Stream = std::function<NumeralState(int)>;

  RealRep(int k, Stream stream, RealProvenance provenance);

  int base() const noexcept { return base_; }
  RealProvenance provenance() const noexcept { return provenance_; }
  NumeralState prefix(int n) const { return stream_(n); }

  /// True when prefix(n) is an initial part of prefix(n2) for all n < n2 <= n_max.
  bool check_prefix_property(int n_max) const;

  /// Built from a digit expansion of an exact rational.
  static RealRep from_expansion(PeriodicExpansion e, RealProvenance provenance);

 private:
  int base_;
  Stream stream_;
  RealProvenance provenance_;
};

struct ComplexRep {
  RealRep re;
  RealRep im;

  ComplexRep(RealRep r, RealRep i);
};

/// True when `longer`, cut to `digits` fractional digits (default: the
/// point of `shorter`), equals `shorter` in sign and value.
bool is_initial_part(const NumeralState& shorter, const NumeralState& longer, int digits = -1);

/// Constant-sequence class of a finite numeral.
RealRep real_from_numeral(const NumeralState& a);
ComplexRep complex_from_pair(const ComplexNumeral& p);

/// Representative of value(a) in base `target`: constant provenance when
/// the value is finite there, converted (periodic) otherwise.
RealRep real_convert_base(const NumeralState& a, int target);

/// Canonical-stream representative of a sequence, each prefix computed by
/// `canonical` on the given window.
RealRep real_from_sequence(const NumeralSequence& seq, int p_max);

}  // namespace qukit
