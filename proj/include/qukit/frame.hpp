#pragma once

#include "qukit/cauchy.hpp"
#include "qukit/numeral.hpp"
#include "qukit/superposition.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qukit {

/// Reference frame label: iteration stage j, numeral base k and an opaque
/// gauge label g.
struct FrameId {
  int j = 0;
  int k = 2;
  std::string g = "0";

  friend auto operator<=>(const FrameId&, const FrameId&) = default;
};

std::string to_string(const FrameId& f);

namespace topology {
struct FiniteChain {
  int j_min;
  int j_max;
};
enum class Direction { Ascending, Descending };
/// Stages start at `anchor` and run forever in `direction`.
struct OneWayInfinite {
  int anchor;
  Direction direction;
};
struct TwoWayInfinite {};
struct Cyclic {
  int period;
};
}  // namespace topology

using Topology = std::variant<topology::FiniteChain, topology::OneWayInfinite,
                              topology::TwoWayInfinite, topology::Cyclic>;

/// Registry of frames under one stage topology. Built once, then read-only.
class FrameGraph {
 public:
  explicit FrameGraph(Topology t);

  /// Registers a frame, optionally binding its gauge label to a map.
  /// Rejects stages the topology does not contain.
  void add(const FrameId& f, std::optional<GaugeMap> gauge = {});

  const Topology& topology() const noexcept { return topology_; }
  bool contains(const FrameId& f) const { return frames_.contains(f); }
  std::vector<FrameId> frames() const;
  const GaugeMap* gauge(const FrameId& f) const;

  /// Descendants and self are visible, ancestors are not. Every frame sees
  /// every other one under a cyclic topology. Throws UnknownFrame.
  bool visible(const FrameId& observer, const FrameId& target) const;

 private:
  Topology topology_;
  std::map<FrameId, std::optional<GaugeMap>> frames_;
};

/// Space-time lattice of a frame: M = k^L points per dimension with spacing
/// k^-m, D space dimensions and one time dimension of the same size.
class Lattice {
 public:
  Lattice(FrameId frame, int length, int point, int dims);

  const FrameId& frame() const noexcept { return frame_; }
  int base() const noexcept { return frame_.k; }
  int length() const noexcept { return length_; }
  int point() const noexcept { return point_; }
  int dims() const noexcept { return dims_; }

  /// Points per dimension, exactly k^L.
  const BigInt& points_per_dim() const noexcept { return points_; }
  /// Spacing, exactly k^-m.
  const RationalValue& spacing() const noexcept { return spacing_; }
  double spacing_double() const { return to_double(spacing_); }

  /// M as a machine integer; LatticeTooLarge past 2^31.
  std::uint64_t points_per_dim_u64() const;
  /// M^D as a machine integer bounded by `cap`; LatticeTooLarge otherwise.
  std::uint64_t space_sites(std::uint64_t cap = std::uint64_t{1} << 24) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.frame_ == b.frame_ && a.length_ == b.length_ && a.point_ == b.point_ && a.dims_ == b.dims_;
  }

 private:
  FrameId frame_;
  int length_;
  int point_;
  int dims_;
  BigInt points_;
  RationalValue spacing_;
};

/// Validates 0 <= m <= L (InvalidSpacing) and D >= 1.
Lattice make_lattice(const FrameId& frame, int length, int point, int dims);

struct LatticePoint {
  std::vector<std::uint64_t> space;
  std::uint64_t time = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct PointLocation {
  std::vector<RationalValue> space;
  RationalValue time;

  friend bool operator==(const PointLocation&, const PointLocation&) = default;
};

/// Exact (l_1 Delta, ..., l_D Delta; l_t Delta). Throws IndexOutOfRange.
PointLocation point_location(const Lattice& lat, const LatticePoint& p);

/// Parent-frame image of a lattice point: the D space components and the
/// time component as positive hybrid-system states with the lattice's exact
/// L and m (no trimming).
struct HybridTupleImage {
  std::vector<NumeralState> space;
  NumeralState time;

  friend bool operator==(const HybridTupleImage&, const HybridTupleImage&) = default;
  friend auto operator<=>(const HybridTupleImage&, const HybridTupleImage&) = default;
};

/// Point <-> image map of one lattice. Computed per point on demand.
class LatticeImage {
 public:
  explicit LatticeImage(Lattice lat);

  const Lattice& lattice() const noexcept { return lattice_; }

  /// The unique (L, m) state with value l * Delta, gamma = +.
  NumeralState component(std::uint64_t index) const;
  HybridTupleImage at(const LatticePoint& p) const;

  /// Inverse of `at`; ImageMismatch for tuples that are not images of this
  /// lattice's points.
  LatticePoint decode(const HybridTupleImage& t) const;
  std::uint64_t decode_component(const NumeralState& s) const;

 private:
  Lattice lattice_;
};

LatticeImage parent_image_lattice(const Lattice& lat);

/// Enumerates space index tuples, dimension 0 fastest.
std::vector<std::vector<std::uint64_t>> space_indices(const Lattice& lat,
                                                      std::uint64_t cap = std::uint64_t{1} << 20);

/// Image of a stage-j number in a parent frame of base `parent_k`.
RealRep parent_image_number(const NumeralState& a, int parent_k);

/// True when every prime factor of the child base divides the parent base,
/// i.e. every child numeral has a constant-sequence parent image.
bool parent_base_compatible(int child_k, int parent_k);

}  // namespace qukit
