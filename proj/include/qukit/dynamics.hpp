#pragma once

#include "qukit/cauchy.hpp"
#include "qukit/frame.hpp"
#include "qukit/numeral.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qukit {

// ---------------------------------------------------------------------------
// Energies of numbers
// ---------------------------------------------------------------------------

/// Energy eigenvalue assignment for hybrid-system states. The evaluator only
/// ever sees trimmed states and returns a value in units of `scale`.
struct EnergyModel {
  std::string name;
  std::function<double(const NumeralState&)> evaluator;
  double scale = 1.0;
};

namespace energy_models {
/// scale * |value|
EnergyModel magnitude(double scale = 1.0);
/// scale * (sum of trimmed digits)
EnergyModel digit_sum(double scale = 1.0);
/// Looks up "magnitude" or "digit-sum"; InvalidArgument otherwise.
EnergyModel by_name(const std::string& name, double scale = 1.0);
}  // namespace energy_models

/// model.scale * model.evaluator(trim(a)).
double energy_of(const NumeralState& a, const EnergyModel& model);

/// Sum of the space-component energies; the time component carries none.
double tuple_energy(const HybridTupleImage& t, const EnergyModel& model);

enum class Convergence { Convergent, Divergent, Inconclusive };
std::string to_string(Convergence c);

struct EnergySequenceReport {
  std::vector<double> energies;  ///< E_0 .. E_{n_max}
  int n_max = 0;
  int tail_start = 0;
  double tolerance = 0;
  /// max |E_j - E_h| for j, h in [tail_start, n_max].
  double tail_spread = 0;
  /// Spreads of the last two quarters of the window [0, n_max].
  double previous_quarter_spread = 0;
  double last_quarter_spread = 0;
  bool monotone_nondecreasing = false;
  Convergence verdict = Convergence::Inconclusive;
};

/// E_n = energy_of(seq(n)). CONVERGENT when the tail spread is within
/// `tolerance`; DIVERGENT when it is not and the last quarter of the window
/// spreads at least as much as the quarter before it; INCONCLUSIVE otherwise.
EnergySequenceReport energy_sequence(const NumeralSequence& seq, const EnergyModel& model, int n_max,
                                     int tail_start, double tolerance);

// ---------------------------------------------------------------------------
// Hybrid systems and Hamiltonians
// ---------------------------------------------------------------------------

enum class HybridRole { Generic, Space, Time, RealPart, ImaginaryPart };

/// A qukit-string system S_{j,k',L,m} regarded as a physical system.
struct HybridSystem {
  int j = 0;
  int k = 2;
  int length = 1;
  int point = 0;
  std::string h = "1";
  double mass = 1.0;
  EnergyModel model = energy_models::magnitude();
  HybridRole role = HybridRole::Generic;

  /// mass > 0, 0 <= point <= length, valid base.
  void validate() const;
};

/// Checks the role tags of a real/imaginary pair.
void validate_complex_pair(const HybridSystem& re, const HybridSystem& im);

enum class Boundary { Periodic, FixedZero };
std::string to_string(Boundary b);

/// Single-system lattice Hamiltonian -(hbar^2 / 2 mass) Lap + V + E_internal.
struct HamiltonianSpec {
  double mass = 1.0;
  double hbar = 1.0;
  /// Per-site potential, flat index with dimension 0 fastest. Empty = zero.
  std::vector<double> potential;
  double internal_energy = 0.0;

  void validate() const;
};

/// Amplitudes of one time slice over the space sites of a lattice.
class WaveFunction {
 public:
  WaveFunction(Lattice lat, Boundary boundary, std::vector<std::complex<double>> amplitudes);
  /// All-zero wavefunction.
  WaveFunction(Lattice lat, Boundary boundary);

  const Lattice& lattice() const noexcept { return lattice_; }
  Boundary boundary() const noexcept { return boundary_; }
  std::uint64_t points_per_dim() const noexcept { return m_; }
  std::size_t sites() const noexcept { return amps_.size(); }

  std::span<const std::complex<double>> amplitudes() const noexcept { return amps_; }
  std::span<std::complex<double>> amplitudes() noexcept { return amps_; }
  std::complex<double> operator[](std::size_t i) const { return amps_[i]; }

  std::size_t flat_index(std::span<const std::uint64_t> space) const;
  std::vector<std::uint64_t> space_index(std::size_t flat) const;

  /// Site one step along dimension z (dir = +1 or -1); nullopt past a
  /// fixed-zero boundary.
  std::optional<std::size_t> neighbor(std::size_t flat, int z, int dir) const;

  double norm2() const;

 private:
  Lattice lattice_;
  Boundary boundary_;
  std::uint64_t m_;
  std::vector<std::complex<double>> amps_;
};

/// Sum over dimensions of (psi(x + Delta e_z) - 2 psi(x) + psi(x - Delta e_z)) / Delta^2.
std::complex<double> laplacian_fb(const WaveFunction& psi, std::span<const std::uint64_t> point);

/// H psi at every site.
std::vector<std::complex<double>> apply_hamiltonian(const WaveFunction& psi, const HamiltonianSpec& h);

/// <psi|H|psi> / <psi|psi>.
double energy_expectation(const WaveFunction& psi, const HamiltonianSpec& h);

/// Explicit forward step psi - (i dt / hbar) H psi. Not unitary.
WaveFunction schrodinger_step(const WaveFunction& psi, const HamiltonianSpec& h, double dt);

/// Exact propagator exp(-i H t / hbar) from a dense eigendecomposition of the
/// lattice Hamiltonian. Throws LatticeTooLarge above `site_cap` sites.
class UnitaryReference {
 public:
  UnitaryReference(const WaveFunction& shape, const HamiltonianSpec& h, std::size_t site_cap = 4096);
  ~UnitaryReference();
  UnitaryReference(UnitaryReference&&) noexcept;
  UnitaryReference& operator=(UnitaryReference&&) noexcept;

  WaveFunction propagate(const WaveFunction& psi0, double t) const;
  std::vector<double> spectrum() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct StepDiagnostics {
  int step = 0;
  double time = 0;
  double norm2 = 0;
  double energy = 0;
  double max_amplitude = 0;
  /// norm2(after) - norm2(before), and (dt/hbar)^2 norm2(H psi_before).
  double norm_growth = 0;
  double predicted_growth = 0;
  std::optional<double> reference_norm2;
  std::optional<double> reference_error;  ///< L2 distance to the unitary reference
};

struct EvolveOptions {
  bool keep_trajectory = true;
  bool unitary_reference = false;
  std::size_t reference_site_cap = 4096;
};

struct Evolution {
  std::vector<WaveFunction> trajectory;  ///< psi_0 .. psi_n when kept
  std::vector<StepDiagnostics> diagnostics;  ///< one record per step, plus step 0
};

Evolution evolve(const WaveFunction& psi0, const HamiltonianSpec& h, double dt, int n_steps,
                 const EvolveOptions& options = {});

/// Same dynamics with every site addressed by its parent-frame image tuple;
/// neighbors are found with succ_ulp / pred_ulp on the space components.
struct ImageEvolution {
  using Slice = std::map<std::vector<NumeralState>, std::complex<double>>;
  std::vector<Slice> trajectory;
  /// Time component label of each slice when the step index lies on the lattice.
  std::vector<std::optional<NumeralState>> time_labels;
  bool identical_to_stage_trajectory = false;
};

ImageEvolution image_evolution(const WaveFunction& psi0, const HamiltonianSpec& h, double dt, int n_steps,
                               const LatticeImage& image);

/// Bitwise amplitude comparison of an image trajectory against a stage one.
bool same_amplitudes(const ImageEvolution& img, const std::vector<WaveFunction>& stage,
                     const LatticeImage& image);

// ---------------------------------------------------------------------------
// Two interacting hybrid systems on one lattice
// ---------------------------------------------------------------------------

struct SystemSpec {
  HybridSystem system;
  NumeralState internal_state;
  Lattice lattice;
  std::vector<double> potential;  ///< optional external potential
};

/// Interaction energy for system A at site a and system B at site b.
using Interaction = std::function<double(std::size_t a, std::size_t b)>;

/// H = H_{0,1} + H_{0,2} + H_int on the product space, flat index a + N b.
class TwoSystemHamiltonian {
 public:
  TwoSystemHamiltonian(SystemSpec a, SystemSpec b, Interaction interaction, Boundary boundary, double hbar);

  std::size_t sites() const noexcept { return n_; }
  double internal_energy(int which) const { return which == 0 ? ea_ : eb_; }

  std::vector<std::complex<double>> apply(std::span<const std::complex<double>> psi) const;
  double expectation(std::span<const std::complex<double>> psi) const;
  /// Eigenvalues of the dense product-space matrix, ascending.
  std::vector<double> spectrum() const;

 private:
  SystemSpec a_;
  SystemSpec b_;
  Interaction interaction_;
  Boundary boundary_;
  double hbar_;
  std::size_t n_;
  double ea_;
  double eb_;
};

/// LatticeMismatch when the systems live on different lattices.
TwoSystemHamiltonian two_system_hamiltonian(SystemSpec a, SystemSpec b, Interaction interaction = {},
                                            Boundary boundary = Boundary::Periodic, double hbar = 1.0);

// ---------------------------------------------------------------------------
// Initial-state and potential families
// ---------------------------------------------------------------------------

namespace states {
/// exp(i sum_z kappa_z x_z) / sqrt(N), kappa_z = 2 pi q_z / (M Delta).
WaveFunction plane_wave(const Lattice& lat, Boundary b, std::span<const std::int64_t> q);
WaveFunction point(const Lattice& lat, Boundary b, std::span<const std::uint64_t> site);
/// Normalized exp(-|x - c|^2 / (2 w^2)) with c and w in index units.
WaveFunction gaussian(const Lattice& lat, Boundary b, std::span<const double> center, double width);
}  // namespace states

namespace potentials {
std::vector<double> zero(const Lattice& lat);
/// -depth on sites whose every index lies in [lo, hi].
std::vector<double> well(const Lattice& lat, double depth, std::uint64_t lo, std::uint64_t hi);
/// stiffness/2 * |x - x_mid|^2 in location units.
std::vector<double> harmonic(const Lattice& lat, double stiffness);
}  // namespace potentials

}  // namespace qukit
