#include "qukit/frame.hpp"

#include "qukit/errors.hpp"

namespace qukit {

std::string to_string(const FrameId& f) {
  return "F(j=" + std::to_string(f.j) + ",k=" + std::to_string(f.k) + ",g=" + f.g + ")";
}

FrameGraph::FrameGraph(Topology t) : topology_(std::move(t)) {
  if (auto* c = std::get_if<topology::FiniteChain>(&topology_); c && c->j_min > c->j_max) {
    fail(Errc::InvalidArgument, "finite chain needs j_min <= j_max");
  }
  if (auto* c = std::get_if<topology::Cyclic>(&topology_); c && c->period < 1) {
    fail(Errc::InvalidArgument, "cyclic period must be >= 1");
  }
}

void FrameGraph::add(const FrameId& f, std::optional<GaugeMap> gauge) {
  check_base(f.k);
  if (gauge && gauge->base() != f.k) {
    fail(Errc::DimensionMismatch, "gauge map base differs from frame base in " + to_string(f));
  }
  const bool ok = std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, topology::FiniteChain>) {
          return f.j >= t.j_min && f.j <= t.j_max;
        } else if constexpr (std::is_same_v<T, topology::OneWayInfinite>) {
          return t.direction == topology::Direction::Ascending ? f.j >= t.anchor : f.j <= t.anchor;
        } else if constexpr (std::is_same_v<T, topology::Cyclic>) {
          return f.j >= 0 && f.j < t.period;
        } else {
          return true;
        }
      },
      topology_);
  if (!ok) fail(Errc::InvalidArgument, to_string(f) + " lies outside the topology's stages");
  frames_.insert_or_assign(f, std::move(gauge));
}

std::vector<FrameId> FrameGraph::frames() const {
  std::vector<FrameId> out;
  for (const auto& [f, g] : frames_) out.push_back(f);
  return out;
}

const GaugeMap* FrameGraph::gauge(const FrameId& f) const {
  auto it = frames_.find(f);
  if (it == frames_.end()) fail(Errc::UnknownFrame, to_string(f) + " is not registered");
  return it->second ? &*it->second : nullptr;
}

bool FrameGraph::visible(const FrameId& observer, const FrameId& target) const {
  for (const auto* f : {&observer, &target}) {
    if (!contains(*f)) fail(Errc::UnknownFrame, to_string(*f) + " is not registered");
  }
  if (std::holds_alternative<topology::Cyclic>(topology_)) return true;
  return target.j >= observer.j;
}

Lattice::Lattice(FrameId frame, int length, int point, int dims)
    : frame_(std::move(frame)), length_(length), point_(point), dims_(dims) {
  check_base(frame_.k);
  if (length < 0) fail(Errc::InvalidArgument, "L must be >= 0");
  if (point < 0 || point > length) {
    fail(Errc::InvalidSpacing,
         "m=" + std::to_string(point) + " outside [0, L=" + std::to_string(length) + "]");
  }
  if (dims < 1) fail(Errc::InvalidArgument, "D must be >= 1");
  points_ = ipow(BigInt(frame_.k), static_cast<unsigned>(length));
  spacing_ = RationalValue(BigInt(1), ipow(BigInt(frame_.k), static_cast<unsigned>(point)));
}

std::uint64_t Lattice::points_per_dim_u64() const {
  if (points_ > (BigInt(1) << 31)) {
    fail(Errc::LatticeTooLarge, "k^L = " + points_.str() + " points per dimension");
  }
  return points_.convert_to<std::uint64_t>();
}

std::uint64_t Lattice::space_sites(std::uint64_t cap) const {
  const BigInt sites = boost::multiprecision::pow(points_, static_cast<unsigned>(dims_));
  if (sites > cap) {
    fail(Errc::LatticeTooLarge, sites.str() + " space sites exceed the cap " + std::to_string(cap));
  }
  return sites.convert_to<std::uint64_t>();
}

Lattice make_lattice(const FrameId& frame, int length, int point, int dims) {
  return Lattice(frame, length, point, dims);
}

namespace {

void check_index(const Lattice& lat, std::uint64_t l) {
  if (BigInt(l) >= lat.points_per_dim()) {
    fail(Errc::IndexOutOfRange,
         "index " + std::to_string(l) + " outside [0, " + lat.points_per_dim().str() + ")");
  }
}

void check_point(const Lattice& lat, const LatticePoint& p) {
  if (static_cast<int>(p.space.size()) != lat.dims()) {
    fail(Errc::IndexOutOfRange, "point has " + std::to_string(p.space.size()) +
                                    " space indices, lattice has D=" + std::to_string(lat.dims()));
  }
  for (auto l : p.space) check_index(lat, l);
  check_index(lat, p.time);
}

}  // namespace

PointLocation point_location(const Lattice& lat, const LatticePoint& p) {
  check_point(lat, p);
  PointLocation loc;
  for (auto l : p.space) loc.space.push_back(RationalValue(BigInt(l)) * lat.spacing());
  loc.time = RationalValue(BigInt(p.time)) * lat.spacing();
  return loc;
}

LatticeImage::LatticeImage(Lattice lat) : lattice_(std::move(lat)) {}

NumeralState LatticeImage::component(std::uint64_t index) const {
  check_index(lattice_, index);
  const int k = lattice_.base();
  std::vector<std::uint8_t> d(static_cast<std::size_t>(lattice_.length()), 0);
  for (std::size_t j = 0; j < d.size() && index > 0; ++j, index /= static_cast<std::uint64_t>(k)) {
    d[j] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(k));
  }
  return NumeralState(k, Sign::Plus, std::move(d), lattice_.point());
}

HybridTupleImage LatticeImage::at(const LatticePoint& p) const {
  check_point(lattice_, p);
  HybridTupleImage t{{}, component(p.time)};
  t.space.reserve(p.space.size());
  for (auto l : p.space) t.space.push_back(component(l));
  return t;
}

std::uint64_t LatticeImage::decode_component(const NumeralState& s) const {
  if (s.base() != lattice_.base() || s.length() != lattice_.length() || s.point() != lattice_.point() ||
      s.sign() != Sign::Plus) {
    fail(Errc::ImageMismatch, format_compact(s) + " is not a component state of this lattice image");
  }
  std::uint64_t l = 0;
  for (int j = s.length() - 1; j >= 0; --j) l = l * static_cast<std::uint64_t>(s.base()) + s.digit(j);
  return l;
}

LatticePoint LatticeImage::decode(const HybridTupleImage& t) const {
  if (static_cast<int>(t.space.size()) != lattice_.dims()) {
    fail(Errc::ImageMismatch, "tuple has the wrong number of space components");
  }
  LatticePoint p;
  for (const auto& s : t.space) p.space.push_back(decode_component(s));
  p.time = decode_component(t.time);
  return p;
}

LatticeImage parent_image_lattice(const Lattice& lat) { return LatticeImage(lat); }

std::vector<std::vector<std::uint64_t>> space_indices(const Lattice& lat, std::uint64_t cap) {
  const std::uint64_t n = lat.space_sites(cap);
  const std::uint64_t m = lat.points_per_dim_u64();
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(n);
  for (std::uint64_t flat = 0; flat < n; ++flat) {
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(lat.dims()));
    std::uint64_t r = flat;
    for (auto& i : idx) {
      i = r % m;
      r /= m;
    }
    out.push_back(std::move(idx));
  }
  return out;
}

RealRep parent_image_number(const NumeralState& a, int parent_k) { return real_convert_base(a, parent_k); }

bool parent_base_compatible(int child_k, int parent_k) {
  check_base(child_k);
  check_base(parent_k);
  return primes_divide(BigInt(child_k), BigInt(parent_k));
}

}  // namespace qukit
