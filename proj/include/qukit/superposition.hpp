#pragma once

#include "qukit/numeral.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace qukit {

using Amplitude = std::complex<double>;

/// Sparse vector in the Fock space spanned by numeral basis states of one
/// base. Keys are full labels, so padded variants of a number are distinct
/// orthogonal directions.
class StringSuperposition {
 public:
  using Map = std::map<NumeralState, Amplitude>;

  explicit StringSuperposition(int k) : base_(k) { check_base(k); }

  /// Single basis state with amplitude 1.
  static StringSuperposition basis(const NumeralState& a);

  int base() const noexcept { return base_; }
  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds `c` to the amplitude of `label`; entries that become exactly zero
  /// are removed.
  void add(const NumeralState& label, Amplitude c);

  Amplitude amplitude(const NumeralState& label) const;

  double norm2() const;

  /// Copy scaled to unit norm. Throws NotNormalized for the zero vector.
  StringSuperposition normalized() const;

  /// The single label when this is a basis state with |c| = 1 (within 1e-12).
  std::optional<NumeralState> as_basis_state() const;

 private:
  int base_;
  Map terms_;
};

/// Uniform single-qukit unitary plus an optional sign-qubit unitary.
/// Matrices are row-major; `qukit[r * k + c]`.
class GaugeMap {
 public:
  GaugeMap(int k, std::vector<Amplitude> qukit, std::optional<std::vector<Amplitude>> sign = {});

  static GaugeMap identity(int k);

  int base() const noexcept { return base_; }
  Amplitude qukit(int row, int col) const { return qukit_[static_cast<std::size_t>(row * base_ + col)]; }
  bool has_sign_map() const noexcept { return sign_.has_value(); }
  Amplitude sign(int row, int col) const { return (*sign_)[static_cast<std::size_t>(row * 2 + col)]; }

  /// Conjugate transpose of both matrices.
  GaugeMap adjoint() const;

 private:
  int base_;
  std::vector<Amplitude> qukit_;
  std::optional<std::vector<Amplitude>> sign_;
};

/// Sesquilinear <phi|psi>, antilinear in the first argument.
Amplitude inner_product(const StringSuperposition& phi, const StringSuperposition& psi);

enum class LiftOp { Add, Sub };

/// Applies add/sub basis-wise: sum over pairs of c_a d_b |op(a, b)>.
StringSuperposition lift_arith(LiftOp op, const StringSuperposition& phi, const StringSuperposition& psi);

/// Product-measure probability that a component drawn from phi and one drawn
/// from psi lie within k^-ell of each other.
double prob_arith_close(const StringSuperposition& phi, const StringSuperposition& psi, int ell);

/// Applies the gauge map to every qukit (and the sign qubit when present).
/// The expansion has k^L (x2) terms per input label; inputs whose labels
/// would expand past `max_terms` raise InvalidArgument.
StringSuperposition gauge_transform(const StringSuperposition& psi, const GaugeMap& g,
                                    std::size_t max_terms = std::size_t{1} << 20);

}  // namespace qukit
