#include "qukit/superposition.hpp"

#include "qukit/errors.hpp"

#include <cmath>

namespace qukit {

namespace {

void require_same_base(int a, int b) {
  if (a != b) {
    fail(Errc::BaseMismatch, "bases " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

bool is_unitary(const std::vector<Amplitude>& u, int n, double tol) {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Amplitude s = 0;
      for (int i = 0; i < n; ++i) {
        s += std::conj(u[static_cast<std::size_t>(i * n + r)]) * u[static_cast<std::size_t>(i * n + c)];
      }
      if (std::abs(s - Amplitude(r == c ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

std::vector<Amplitude> adjoint_of(const std::vector<Amplitude>& u, int n) {
  std::vector<Amplitude> out(u.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out[static_cast<std::size_t>(c * n + r)] = std::conj(u[static_cast<std::size_t>(r * n + c)]);
    }
  }
  return out;
}

}  // namespace

StringSuperposition StringSuperposition::basis(const NumeralState& a) {
  StringSuperposition s(a.base());
  s.add(a, 1.0);
  return s;
}

void StringSuperposition::add(const NumeralState& label, Amplitude c) {
  require_same_base(base_, label.base());
  auto [it, inserted] = terms_.try_emplace(label, c);
  if (!inserted) it->second += c;
  if (it->second == Amplitude(0.0)) terms_.erase(it);
}

Amplitude StringSuperposition::amplitude(const NumeralState& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Amplitude(0.0) : it->second;
}

double StringSuperposition::norm2() const {
  double s = 0;
  for (const auto& [label, c] : terms_) s += std::norm(c);
  return s;
}

StringSuperposition StringSuperposition::normalized() const {
  const double n = std::sqrt(norm2());
  if (n == 0) fail(Errc::NotNormalized, "cannot normalize the zero vector");
  StringSuperposition out(base_);
  for (const auto& [label, c] : terms_) out.terms_.emplace(label, c / n);
  return out;
}

std::optional<NumeralState> StringSuperposition::as_basis_state() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [label, c] = *terms_.begin();
  if (std::abs(std::abs(c) - 1.0) > 1e-12) return std::nullopt;
  return label;
}

GaugeMap::GaugeMap(int k, std::vector<Amplitude> qukit, std::optional<std::vector<Amplitude>> sign)
    : base_(k), qukit_(std::move(qukit)), sign_(std::move(sign)) {
  check_base(k);
  if (qukit_.size() != static_cast<std::size_t>(k * k)) {
    fail(Errc::DimensionMismatch, "qukit map must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  if (sign_ && sign_->size() != 4) fail(Errc::DimensionMismatch, "sign map must be 2x2");
  if (!is_unitary(qukit_, k, 1e-10)) fail(Errc::InvalidArgument, "qukit map is not unitary");
  if (sign_ && !is_unitary(*sign_, 2, 1e-10)) fail(Errc::InvalidArgument, "sign map is not unitary");
}

GaugeMap GaugeMap::identity(int k) {
  std::vector<Amplitude> u(static_cast<std::size_t>(k * k), 0.0);
  for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i * k + i)] = 1.0;
  return GaugeMap(k, std::move(u));
}

GaugeMap GaugeMap::adjoint() const {
  std::optional<std::vector<Amplitude>> s;
  if (sign_) s = adjoint_of(*sign_, 2);
  return GaugeMap(base_, adjoint_of(qukit_, base_), std::move(s));
}

Amplitude inner_product(const StringSuperposition& phi, const StringSuperposition& psi) {
  require_same_base(phi.base(), psi.base());
  Amplitude s = 0;
  const auto& small = phi.size() <= psi.size() ? phi : psi;
  const auto& large = phi.size() <= psi.size() ? psi : phi;
  for (const auto& [label, c] : small.terms()) {
    auto it = large.terms().find(label);
    if (it == large.terms().end()) continue;
    const Amplitude a = &small == &phi ? c : it->second;
    const Amplitude b = &small == &phi ? it->second : c;
    s += std::conj(a) * b;
  }
  return s;
}

StringSuperposition lift_arith(LiftOp op, const StringSuperposition& phi, const StringSuperposition& psi) {
  require_same_base(phi.base(), psi.base());
  StringSuperposition out(phi.base());
  for (const auto& [a, ca] : phi.terms()) {
    for (const auto& [b, cb] : psi.terms()) {
      out.add(op == LiftOp::Add ? add_arith(a, b) : sub_arith(a, b), ca * cb);
    }
  }
  return out;
}

double prob_arith_close(const StringSuperposition& phi, const StringSuperposition& psi, int ell) {
  require_same_base(phi.base(), psi.base());
  const NumeralState bound = unit_power(phi.base(), ell);
  double p = 0;
  for (const auto& [a, ca] : phi.terms()) {
    for (const auto& [b, cb] : psi.terms()) {
      if (cmp_arith(abs_arith(sub_arith(a, b)), bound) != std::strong_ordering::greater) {
        p += std::norm(ca) * std::norm(cb);
      }
    }
  }
  return p;
}

StringSuperposition gauge_transform(const StringSuperposition& psi, const GaugeMap& g,
                                    std::size_t max_terms) {
  if (g.base() != psi.base()) {
    fail(Errc::DimensionMismatch, "gauge map acts on base " + std::to_string(g.base()) +
                                      ", state has base " + std::to_string(psi.base()));
  }
  const int k = psi.base();
  StringSuperposition out(k);
  for (const auto& [label, c] : psi.terms()) {
    // Expand the tensor product one qukit at a time.
    std::vector<std::pair<std::vector<std::uint8_t>, Amplitude>> partial{{{}, c}};
    for (int j = 0; j < label.length(); ++j) {
      const int in = label.digit(j);
      std::vector<std::pair<std::vector<std::uint8_t>, Amplitude>> next;
      if (partial.size() * static_cast<std::size_t>(k) > max_terms) {
        fail(Errc::InvalidArgument, "gauge expansion exceeds " + std::to_string(max_terms) + " terms");
      }
      for (const auto& [digits, amp] : partial) {
        for (int r = 0; r < k; ++r) {
          const Amplitude u = g.qukit(r, in);
          if (u == Amplitude(0.0)) continue;
          auto d = digits;
          d.push_back(static_cast<std::uint8_t>(r));
          next.emplace_back(std::move(d), amp * u);
        }
      }
      partial = std::move(next);
    }
    const int sin = label.sign() == Sign::Plus ? 0 : 1;
    for (const auto& [digits, amp] : partial) {
      if (!g.has_sign_map()) {
        out.add(NumeralState(k, label.sign(), digits, label.point()), amp);
        continue;
      }
      for (int r = 0; r < 2; ++r) {
        const Amplitude u = g.sign(r, sin);
        if (u == Amplitude(0.0)) continue;
        out.add(NumeralState(k, r == 0 ? Sign::Plus : Sign::Minus, digits, label.point()), amp * u);
      }
    }
  }
  return out;
}

}  // namespace qukit
