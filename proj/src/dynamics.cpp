#include "qukit/dynamics.hpp"

#include "qukit/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qukit {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Energies of numbers
// ---------------------------------------------------------------------------

namespace energy_models {

EnergyModel magnitude(double scale) {
  return {"magnitude", [](const NumeralState& a) { return std::abs(to_double(value(a))); }, scale};
}

EnergyModel digit_sum(double scale) {
  return {"digit-sum",
          [](const NumeralState& a) {
            double s = 0;
            for (auto d : a.digits()) s += d;
            return s;
          },
          scale};
}

EnergyModel by_name(const std::string& name, double scale) {
  if (!(scale > 0)) fail(Errc::InvalidArgument, "energy scale must be > 0");
  if (name == "magnitude") return magnitude(scale);
  if (name == "digit-sum") return digit_sum(scale);
  fail(Errc::InvalidArgument, "unknown energy model '" + name + "'");
}

}  // namespace energy_models

double energy_of(const NumeralState& a, const EnergyModel& model) {
  return model.scale * model.evaluator(trim(a));
}

double tuple_energy(const HybridTupleImage& t, const EnergyModel& model) {
  double e = 0;
  for (const auto& s : t.space) e += energy_of(s, model);
  return e;
}

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::Convergent: return "CONVERGENT";
    case Convergence::Divergent: return "DIVERGENT";
    case Convergence::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

double spread(const std::vector<double>& e, int lo, int hi) {
  lo = std::max(lo, 0);
  if (lo > hi) return 0;
  auto [mn, mx] = std::minmax_element(e.begin() + lo, e.begin() + hi + 1);
  return *mx - *mn;
}

}  // namespace

EnergySequenceReport energy_sequence(const NumeralSequence& seq, const EnergyModel& model, int n_max,
                                     int tail_start, double tolerance) {
  if (n_max < 1 || tail_start < 0 || tail_start > n_max) {
    fail(Errc::InvalidArgument, "need 0 <= tail_start <= n_max and n_max >= 1");
  }
  if (!(tolerance >= 0)) fail(Errc::InvalidArgument, "tolerance must be >= 0");
  EnergySequenceReport r;
  r.n_max = n_max;
  r.tail_start = tail_start;
  r.tolerance = tolerance;
  for (int n = 0; n <= n_max; ++n) r.energies.push_back(energy_of(seq.basis_term(n), model));

  r.tail_spread = spread(r.energies, tail_start, n_max);
  const int w = std::max(1, (n_max + 1) / 4);
  r.last_quarter_spread = spread(r.energies, n_max - w + 1, n_max);
  r.previous_quarter_spread = spread(r.energies, n_max - 2 * w + 1, n_max - w);
  r.monotone_nondecreasing = std::is_sorted(r.energies.begin(), r.energies.end());
  if (r.tail_spread <= tolerance) {
    r.verdict = Convergence::Convergent;
  } else if (r.last_quarter_spread >= r.previous_quarter_spread) {
    r.verdict = Convergence::Divergent;
  } else {
    r.verdict = Convergence::Inconclusive;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hybrid systems
// ---------------------------------------------------------------------------

void HybridSystem::validate() const {
  check_base(k);
  if (!(mass > 0)) fail(Errc::InvalidArgument, "hybrid system mass must be > 0");
  if (length < 0 || point < 0 || point > length) {
    fail(Errc::InvalidArgument, "hybrid system needs 0 <= m <= L");
  }
  if (!model.evaluator) fail(Errc::InvalidArgument, "hybrid system needs an energy model");
}

void validate_complex_pair(const HybridSystem& re, const HybridSystem& im) {
  re.validate();
  im.validate();
  if (re.role != HybridRole::RealPart || im.role != HybridRole::ImaginaryPart) {
    fail(Errc::InvalidArgument, "complex pair needs (real-part, imaginary-part) roles");
  }
  if (re.k != im.k || re.length != im.length || re.point != im.point || re.j != im.j) {
    fail(Errc::InvalidArgument, "complex pair systems must share j, k, L, m");
  }
  if (re.h == im.h) fail(Errc::InvalidArgument, "complex pair systems need distinct h labels");
}

std::string to_string(Boundary b) { return b == Boundary::Periodic ? "periodic" : "fixed-zero"; }

void HamiltonianSpec::validate() const {
  if (!(mass > 0)) fail(Errc::InvalidArgument, "mass must be > 0");
  if (!(hbar > 0)) fail(Errc::InvalidArgument, "hbar must be > 0");
}

// ---------------------------------------------------------------------------
// Lattice geometry and the shared stencil kernel
// ---------------------------------------------------------------------------

namespace {

struct Geometry {
  std::uint64_t m;
  int dims;
  Boundary boundary;

  std::optional<std::size_t> neighbor(std::size_t flat, int z, int dir) const {
    std::uint64_t stride = 1;
    for (int i = 0; i < z; ++i) stride *= m;
    const std::uint64_t coord = (flat / stride) % m;
    std::uint64_t next;
    if (dir > 0) {
      if (coord + 1 < m) {
        next = coord + 1;
      } else if (boundary == Boundary::Periodic) {
        next = 0;
      } else {
        return std::nullopt;
      }
    } else {
      if (coord > 0) {
        next = coord - 1;
      } else if (boundary == Boundary::Periodic) {
        next = m - 1;
      } else {
        return std::nullopt;
      }
    }
    return flat - coord * stride + next * stride;
  }
};

// Both the stage-j and the image-labelled evolutions go through these three
// functions so that their floating-point operations are identical.
cplx stencil_laplacian(cplx center, std::span<const cplx> plus, std::span<const cplx> minus, double dx2) {
  cplx s = 0;
  for (std::size_t z = 0; z < plus.size(); ++z) s += (plus[z] - 2.0 * center + minus[z]) / dx2;
  return s;
}

cplx hamiltonian_at(cplx center, cplx lap, double potential, const HamiltonianSpec& h) {
  const double kinetic = h.hbar * h.hbar / (2.0 * h.mass);
  return -kinetic * lap + (potential + h.internal_energy) * center;
}

cplx step_at(cplx center, cplx h_psi, double dt, double hbar) {
  return center - cplx(0.0, dt / hbar) * h_psi;
}

double potential_at(const HamiltonianSpec& h, std::size_t site) {
  return h.potential.empty() ? 0.0 : h.potential[site];
}

double norm2_of(std::span<const cplx> v) {
  long double s = 0;
  for (const auto& c : v) s += static_cast<long double>(std::norm(c));
  return static_cast<double>(s);
}

}  // namespace

WaveFunction::WaveFunction(Lattice lat, Boundary boundary, std::vector<cplx> amplitudes)
    : lattice_(std::move(lat)), boundary_(boundary), m_(lattice_.points_per_dim_u64()),
      amps_(std::move(amplitudes)) {
  if (amps_.size() != lattice_.space_sites()) {
    fail(Errc::DimensionMismatch, "wavefunction has " + std::to_string(amps_.size()) +
                                      " amplitudes, lattice has " +
                                      std::to_string(lattice_.space_sites()) + " sites");
  }
}

WaveFunction::WaveFunction(Lattice lat, Boundary boundary)
    : lattice_(std::move(lat)), boundary_(boundary), m_(lattice_.points_per_dim_u64()),
      amps_(lattice_.space_sites(), cplx(0.0)) {}

std::size_t WaveFunction::flat_index(std::span<const std::uint64_t> space) const {
  if (static_cast<int>(space.size()) != lattice_.dims()) {
    fail(Errc::IndexOutOfRange, "point needs " + std::to_string(lattice_.dims()) + " indices");
  }
  std::size_t flat = 0;
  for (std::size_t z = space.size(); z-- > 0;) {
    if (space[z] >= m_) fail(Errc::IndexOutOfRange, "index " + std::to_string(space[z]) + " >= M");
    flat = flat * m_ + space[z];
  }
  return flat;
}

std::vector<std::uint64_t> WaveFunction::space_index(std::size_t flat) const {
  std::vector<std::uint64_t> idx(static_cast<std::size_t>(lattice_.dims()));
  for (auto& i : idx) {
    i = flat % m_;
    flat /= m_;
  }
  return idx;
}

std::optional<std::size_t> WaveFunction::neighbor(std::size_t flat, int z, int dir) const {
  return Geometry{m_, lattice_.dims(), boundary_}.neighbor(flat, z, dir);
}

double WaveFunction::norm2() const { return norm2_of(amps_); }

namespace {

cplx laplacian_at(const WaveFunction& psi, std::size_t flat, std::vector<cplx>& plus, std::vector<cplx>& minus) {
  const int dims = psi.lattice().dims();
  plus.assign(static_cast<std::size_t>(dims), cplx(0.0));
  minus.assign(static_cast<std::size_t>(dims), cplx(0.0));
  for (int z = 0; z < dims; ++z) {
    if (auto n = psi.neighbor(flat, z, +1)) plus[static_cast<std::size_t>(z)] = psi[*n];
    if (auto n = psi.neighbor(flat, z, -1)) minus[static_cast<std::size_t>(z)] = psi[*n];
  }
  const double dx = psi.lattice().spacing_double();
  return stencil_laplacian(psi[flat], plus, minus, dx * dx);
}

}  // namespace

cplx laplacian_fb(const WaveFunction& psi, std::span<const std::uint64_t> point) {
  const std::size_t flat = psi.flat_index(point);
  std::vector<cplx> plus, minus;
  return laplacian_at(psi, flat, plus, minus);
}

std::vector<cplx> apply_hamiltonian(const WaveFunction& psi, const HamiltonianSpec& h) {
  h.validate();
  if (!h.potential.empty() && h.potential.size() != psi.sites()) {
    fail(Errc::DimensionMismatch, "potential size differs from the lattice site count");
  }
  std::vector<cplx> out(psi.sites());
  std::vector<cplx> plus, minus;
  for (std::size_t i = 0; i < psi.sites(); ++i) {
    out[i] = hamiltonian_at(psi[i], laplacian_at(psi, i, plus, minus), potential_at(h, i), h);
  }
  return out;
}

double energy_expectation(const WaveFunction& psi, const HamiltonianSpec& h) {
  const auto hpsi = apply_hamiltonian(psi, h);
  long double num = 0;
  for (std::size_t i = 0; i < psi.sites(); ++i) {
    num += static_cast<long double>((std::conj(psi[i]) * hpsi[i]).real());
  }
  const double n2 = psi.norm2();
  if (n2 == 0) fail(Errc::NotNormalized, "energy of the zero wavefunction");
  return static_cast<double>(num) / n2;
}

namespace {

WaveFunction step_with(const WaveFunction& psi, const std::vector<cplx>& hpsi, double dt, double hbar) {
  WaveFunction out(psi.lattice(), psi.boundary());
  auto a = out.amplitudes();
  for (std::size_t i = 0; i < psi.sites(); ++i) a[i] = step_at(psi[i], hpsi[i], dt, hbar);
  return out;
}

}  // namespace

WaveFunction schrodinger_step(const WaveFunction& psi, const HamiltonianSpec& h, double dt) {
  if (!(dt > 0)) fail(Errc::InvalidArgument, "time step must be > 0");
  return step_with(psi, apply_hamiltonian(psi, h), dt, h.hbar);
}

// ---------------------------------------------------------------------------
// Dense unitary reference
// ---------------------------------------------------------------------------

struct UnitaryReference::Impl {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double hbar = 1.0;
};

namespace {

Eigen::MatrixXd dense_matrix(std::size_t n, const std::function<std::vector<cplx>(std::span<const cplx>)>& apply) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<cplx> e(n, cplx(0.0));
  for (std::size_t c = 0; c < n; ++c) {
    e[c] = 1.0;
    const auto col = apply(e);
    for (std::size_t r = 0; r < n; ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r].real();
    }
    e[c] = 0.0;
  }
  return m;
}

}  // namespace

UnitaryReference::UnitaryReference(const WaveFunction& shape, const HamiltonianSpec& h, std::size_t site_cap)
    : impl_(std::make_unique<Impl>()) {
  h.validate();
  if (shape.sites() > site_cap) {
    fail(Errc::LatticeTooLarge, std::to_string(shape.sites()) + " sites exceed the unitary reference cap " +
                                    std::to_string(site_cap));
  }
  const auto m = dense_matrix(shape.sites(), [&](std::span<const cplx> v) {
    return apply_hamiltonian(WaveFunction(shape.lattice(), shape.boundary(), {v.begin(), v.end()}), h);
  });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) fail(Errc::InvalidArgument, "eigendecomposition failed");
  impl_->eigenvalues = solver.eigenvalues();
  impl_->eigenvectors = solver.eigenvectors();
  impl_->hbar = h.hbar;
}

UnitaryReference::~UnitaryReference() = default;
UnitaryReference::UnitaryReference(UnitaryReference&&) noexcept = default;
UnitaryReference& UnitaryReference::operator=(UnitaryReference&&) noexcept = default;

WaveFunction UnitaryReference::propagate(const WaveFunction& psi0, double t) const {
  const auto n = static_cast<Eigen::Index>(psi0.sites());
  if (n != impl_->eigenvalues.size()) fail(Errc::DimensionMismatch, "state does not match the reference");
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = psi0[static_cast<std::size_t>(i)];
  Eigen::VectorXcd c = impl_->eigenvectors.transpose().cast<cplx>() * v;
  for (Eigen::Index i = 0; i < n; ++i) c(i) *= std::polar(1.0, -impl_->eigenvalues(i) * t / impl_->hbar);
  Eigen::VectorXcd out = impl_->eigenvectors.cast<cplx>() * c;
  return WaveFunction(psi0.lattice(), psi0.boundary(), {out.data(), out.data() + n});
}

std::vector<double> UnitaryReference::spectrum() const {
  return {impl_->eigenvalues.data(), impl_->eigenvalues.data() + impl_->eigenvalues.size()};
}

// ---------------------------------------------------------------------------
// Evolution
// ---------------------------------------------------------------------------

namespace {

double max_abs(std::span<const cplx> v) {
  double m = 0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

double distance(std::span<const cplx> a, std::span<const cplx> b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long double>(std::norm(a[i] - b[i]));
  return std::sqrt(static_cast<double>(s));
}

}  // namespace

Evolution evolve(const WaveFunction& psi0, const HamiltonianSpec& h, double dt, int n_steps,
                 const EvolveOptions& options) {
  if (n_steps < 1) fail(Errc::InvalidArgument, "n_steps must be >= 1");
  if (!(dt > 0)) fail(Errc::InvalidArgument, "time step must be > 0");
  std::optional<UnitaryReference> ref;
  if (options.unitary_reference) ref.emplace(psi0, h, options.reference_site_cap);

  Evolution ev;
  WaveFunction psi = psi0;
  auto hpsi = apply_hamiltonian(psi, h);
  auto record = [&](int step, double growth, double predicted) {
    StepDiagnostics d;
    d.step = step;
    d.time = step * dt;
    d.norm2 = psi.norm2();
    d.energy = d.norm2 > 0 ? energy_expectation(psi, h) : 0.0;
    d.max_amplitude = max_abs(psi.amplitudes());
    d.norm_growth = growth;
    d.predicted_growth = predicted;
    if (ref) {
      const WaveFunction r = ref->propagate(psi0, d.time);
      d.reference_norm2 = r.norm2();
      d.reference_error = distance(psi.amplitudes(), r.amplitudes());
    }
    ev.diagnostics.push_back(d);
  };
  record(0, 0.0, 0.0);
  if (options.keep_trajectory) ev.trajectory.push_back(psi);
  for (int s = 1; s <= n_steps; ++s) {
    const double before = psi.norm2();
    const double predicted = (dt / h.hbar) * (dt / h.hbar) * norm2_of(hpsi);
    psi = step_with(psi, hpsi, dt, h.hbar);
    hpsi = apply_hamiltonian(psi, h);
    record(s, psi.norm2() - before, predicted);
    if (options.keep_trajectory) ev.trajectory.push_back(psi);
  }
  return ev;
}

ImageEvolution image_evolution(const WaveFunction& psi0, const HamiltonianSpec& h, double dt, int n_steps,
                               const LatticeImage& image) {
  if (!(image.lattice() == psi0.lattice())) {
    fail(Errc::ImageMismatch, "image was generated from a different lattice");
  }
  if (n_steps < 1) fail(Errc::InvalidArgument, "n_steps must be >= 1");
  if (!(dt > 0)) fail(Errc::InvalidArgument, "time step must be > 0");
  h.validate();
  if (!h.potential.empty() && h.potential.size() != psi0.sites()) {
    fail(Errc::DimensionMismatch, "potential size differs from the lattice site count");
  }

  const Lattice& lat = psi0.lattice();
  const int dims = lat.dims();
  const std::uint64_t m = lat.points_per_dim_u64();
  const NumeralState lowest = image.component(0);
  const NumeralState highest = image.component(m - 1);
  const double dx = lat.spacing_double();
  const bool periodic = psi0.boundary() == Boundary::Periodic;

  // Potential as a function of the space image states.
  std::map<std::vector<NumeralState>, double> potential;
  ImageEvolution out;
  ImageEvolution::Slice slice;
  for (std::size_t i = 0; i < psi0.sites(); ++i) {
    LatticePoint p{psi0.space_index(i), 0};
    auto key = image.at(p).space;
    potential.emplace(key, potential_at(h, i));
    slice.emplace(std::move(key), psi0[i]);
  }

  auto time_label = [&](int step) -> std::optional<NumeralState> {
    if (static_cast<std::uint64_t>(step) < m) return image.component(static_cast<std::uint64_t>(step));
    return std::nullopt;
  };
  out.trajectory.push_back(slice);
  out.time_labels.push_back(time_label(0));

  std::vector<cplx> plus(static_cast<std::size_t>(dims)), minus(static_cast<std::size_t>(dims));
  for (int s = 1; s <= n_steps; ++s) {
    ImageEvolution::Slice next;
    for (const auto& [key, center] : slice) {
      for (int z = 0; z < dims; ++z) {
        const auto zi = static_cast<std::size_t>(z);
        auto up = key;
        up[zi] = succ_ulp(key[zi]);
        if (up[zi].length() > lat.length()) up[zi] = lowest;  // carried past the top state
        const bool up_ok = periodic || !(key[zi] == highest);
        plus[zi] = up_ok ? slice.at(up) : cplx(0.0);

        auto down = key;
        down[zi] = pred_ulp(key[zi]);
        if (down[zi].sign() == Sign::Minus) down[zi] = highest;  // below the zero state
        const bool down_ok = periodic || !(key[zi] == lowest);
        minus[zi] = down_ok ? slice.at(down) : cplx(0.0);
      }
      const cplx hpsi = hamiltonian_at(center, stencil_laplacian(center, plus, minus, dx * dx),
                                       potential.at(key), h);
      next.emplace(key, step_at(center, hpsi, dt, h.hbar));
    }
    slice = std::move(next);
    out.trajectory.push_back(slice);
    out.time_labels.push_back(time_label(s));
  }

  const Evolution stage = evolve(psi0, h, dt, n_steps);
  out.identical_to_stage_trajectory = same_amplitudes(out, stage.trajectory, image);
  return out;
}

bool same_amplitudes(const ImageEvolution& img, const std::vector<WaveFunction>& stage, const LatticeImage& image) {
  if (img.trajectory.size() != stage.size()) return false;
  for (std::size_t s = 0; s < stage.size(); ++s) {
    const auto& psi = stage[s];
    if (img.trajectory[s].size() != psi.sites()) return false;
    for (std::size_t i = 0; i < psi.sites(); ++i) {
      auto key = image.at(LatticePoint{psi.space_index(i), 0}).space;
      auto it = img.trajectory[s].find(key);
      if (it == img.trajectory[s].end()) return false;
      // Bitwise: both real and imaginary parts must match exactly.
      if (it->second.real() != psi[i].real() || it->second.imag() != psi[i].imag()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Two systems
// ---------------------------------------------------------------------------

TwoSystemHamiltonian::TwoSystemHamiltonian(SystemSpec a, SystemSpec b, Interaction interaction,
                                           Boundary boundary, double hbar)
    : a_(std::move(a)), b_(std::move(b)), interaction_(std::move(interaction)), boundary_(boundary),
      hbar_(hbar) {
  if (!(a_.lattice == b_.lattice)) fail(Errc::LatticeMismatch, "systems live on different lattices");
  if (!(hbar > 0)) fail(Errc::InvalidArgument, "hbar must be > 0");
  for (const SystemSpec* s : {&a_, &b_}) {
    s->system.validate();
    const auto& st = s->internal_state;
    if (st.base() != s->system.k || st.length() != s->system.length || st.point() != s->system.point) {
      fail(Errc::InvalidArgument, "internal state " + format_compact(st) + " does not fit system h=" + s->system.h);
    }
  }
  n_ = a_.lattice.space_sites();
  for (const SystemSpec* s : {&a_, &b_}) {
    if (!s->potential.empty() && s->potential.size() != n_) {
      fail(Errc::DimensionMismatch, "potential size differs from the lattice site count");
    }
  }
  ea_ = energy_of(a_.internal_state, a_.system.model);
  eb_ = energy_of(b_.internal_state, b_.system.model);
}

std::vector<cplx> TwoSystemHamiltonian::apply(std::span<const cplx> psi) const {
  if (psi.size() != n_ * n_) fail(Errc::DimensionMismatch, "two-system state has the wrong size");
  const Geometry geo{a_.lattice.points_per_dim_u64(), a_.lattice.dims(), boundary_};
  const double dx = a_.lattice.spacing_double();
  const double dx2 = dx * dx;
  const int dims = a_.lattice.dims();
  std::vector<cplx> out(psi.size());
  std::vector<cplx> plus(static_cast<std::size_t>(dims)), minus(static_cast<std::size_t>(dims));
  auto at = [&](std::size_t ia, std::size_t ib) { return psi[ia + n_ * ib]; };
  for (std::size_t ib = 0; ib < n_; ++ib) {
    for (std::size_t ia = 0; ia < n_; ++ia) {
      const cplx center = at(ia, ib);
      for (int z = 0; z < dims; ++z) {
        auto up = geo.neighbor(ia, z, +1), dn = geo.neighbor(ia, z, -1);
        plus[static_cast<std::size_t>(z)] = up ? at(*up, ib) : cplx(0.0);
        minus[static_cast<std::size_t>(z)] = dn ? at(*dn, ib) : cplx(0.0);
      }
      const cplx lap_a = stencil_laplacian(center, plus, minus, dx2);
      for (int z = 0; z < dims; ++z) {
        auto up = geo.neighbor(ib, z, +1), dn = geo.neighbor(ib, z, -1);
        plus[static_cast<std::size_t>(z)] = up ? at(ia, *up) : cplx(0.0);
        minus[static_cast<std::size_t>(z)] = dn ? at(ia, *dn) : cplx(0.0);
      }
      const cplx lap_b = stencil_laplacian(center, plus, minus, dx2);
      double v = ea_ + eb_;
      if (!a_.potential.empty()) v += a_.potential[ia];
      if (!b_.potential.empty()) v += b_.potential[ib];
      if (interaction_) v += interaction_(ia, ib);
      out[ia + n_ * ib] = -(hbar_ * hbar_ / (2.0 * a_.system.mass)) * lap_a -
                          (hbar_ * hbar_ / (2.0 * b_.system.mass)) * lap_b + v * center;
    }
  }
  return out;
}

double TwoSystemHamiltonian::expectation(std::span<const cplx> psi) const {
  const auto hpsi = apply(psi);
  long double num = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) num += static_cast<long double>((std::conj(psi[i]) * hpsi[i]).real());
  const double n2 = norm2_of(psi);
  if (n2 == 0) fail(Errc::NotNormalized, "energy of the zero state");
  return static_cast<double>(num) / n2;
}

std::vector<double> TwoSystemHamiltonian::spectrum() const {
  if (n_ * n_ > 4096) fail(Errc::LatticeTooLarge, "two-system spectrum limited to 4096 product sites");
  const auto m = dense_matrix(n_ * n_, [&](std::span<const cplx> v) { return apply(v); });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

TwoSystemHamiltonian two_system_hamiltonian(SystemSpec a, SystemSpec b, Interaction interaction,
                                            Boundary boundary, double hbar) {
  return TwoSystemHamiltonian(std::move(a), std::move(b), std::move(interaction), boundary, hbar);
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

namespace states {

WaveFunction plane_wave(const Lattice& lat, Boundary b, std::span<const std::int64_t> q) {
  WaveFunction psi(lat, b);
  if (static_cast<int>(q.size()) != lat.dims()) {
    fail(Errc::DimensionMismatch, "plane wave needs one momentum index per dimension");
  }
  const auto m = static_cast<std::int64_t>(psi.points_per_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(psi.sites()));
  auto a = psi.amplitudes();
  for (std::size_t i = 0; i < psi.sites(); ++i) {
    const auto idx = psi.space_index(i);
    std::int64_t phase = 0;
    for (std::size_t z = 0; z < idx.size(); ++z) phase += q[z] * static_cast<std::int64_t>(idx[z]);
    phase = ((phase % m) + m) % m;
    a[i] = std::polar(amp, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(m));
  }
  return psi;
}

WaveFunction point(const Lattice& lat, Boundary b, std::span<const std::uint64_t> site) {
  WaveFunction psi(lat, b);
  psi.amplitudes()[psi.flat_index(site)] = 1.0;
  return psi;
}

WaveFunction gaussian(const Lattice& lat, Boundary b, std::span<const double> center, double width) {
  if (!(width > 0)) fail(Errc::InvalidArgument, "gaussian width must be > 0");
  WaveFunction psi(lat, b);
  if (static_cast<int>(center.size()) != lat.dims()) {
    fail(Errc::DimensionMismatch, "gaussian center needs one coordinate per dimension");
  }
  auto a = psi.amplitudes();
  for (std::size_t i = 0; i < psi.sites(); ++i) {
    const auto idx = psi.space_index(i);
    double r2 = 0;
    for (std::size_t z = 0; z < idx.size(); ++z) {
      const double d = static_cast<double>(idx[z]) - center[z];
      r2 += d * d;
    }
    a[i] = std::exp(-r2 / (2.0 * width * width));
  }
  const double n = std::sqrt(psi.norm2());
  if (n == 0) fail(Errc::NotNormalized, "gaussian underflowed to zero");
  for (auto& c : a) c /= n;
  return psi;
}

}  // namespace states

namespace potentials {

std::vector<double> zero(const Lattice& lat) { return std::vector<double>(lat.space_sites(), 0.0); }

std::vector<double> well(const Lattice& lat, double depth, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) fail(Errc::InvalidArgument, "well region needs lo <= hi");
  const auto idx = space_indices(lat, std::uint64_t{1} << 24);
  std::vector<double> v(idx.size(), 0.0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (std::all_of(idx[i].begin(), idx[i].end(), [&](auto l) { return l >= lo && l <= hi; })) v[i] = -depth;
  }
  return v;
}

std::vector<double> harmonic(const Lattice& lat, double stiffness) {
  const auto idx = space_indices(lat, std::uint64_t{1} << 24);
  const double dx = lat.spacing_double();
  const double mid = static_cast<double>(lat.points_per_dim_u64() - 1) * dx / 2.0;
  std::vector<double> v(idx.size(), 0.0);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    double r2 = 0;
    for (auto l : idx[i]) {
      const double d = static_cast<double>(l) * dx - mid;
      r2 += d * d;
    }
    v[i] = 0.5 * stiffness * r2;
  }
  return v;
}

}  // namespace potentials

}  // namespace qukit
