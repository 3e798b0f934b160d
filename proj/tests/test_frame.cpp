#include "helpers.hpp"

#include "qukit/frame.hpp"

#include <doctest.h>

#include <set>

using namespace qukit;
using testing::frac;
using testing::parse;

namespace {

Lattice lat(int k, int L, int m, int D) { return make_lattice(FrameId{0, k, "0"}, L, m, D); }

FrameGraph chain() {
  FrameGraph g(topology::FiniteChain{0, 3});
  for (int j = 0; j <= 3; ++j) g.add(FrameId{j, 2, "0"});
  return g;
}

}  // namespace

TEST_SUITE("frame") {

TEST_CASE("make_lattice") {
  const Lattice a = lat(2, 3, 1, 1);
  CHECK(a.points_per_dim() == 8);
  CHECK(a.spacing() == RationalValue(1, 2));
  CHECK(a.points_per_dim_u64() == 8);

  const Lattice one = lat(2, 0, 0, 1);
  CHECK(one.points_per_dim() == 1);
  CHECK(one.spacing() == RationalValue(1));
  CHECK(space_indices(one).size() == 1);

  CHECK_ERRC(lat(3, 2, 3, 1), Errc::InvalidSpacing);
  CHECK_ERRC(lat(2, 3, 1, 0), Errc::InvalidArgument);
  CHECK_ERRC(lat(1, 3, 1, 1), Errc::InvalidArgument);
  CHECK_ERRC(lat(2, 40, 0, 1).points_per_dim_u64(), Errc::LatticeTooLarge);
  CHECK_ERRC(lat(2, 10, 0, 3).space_sites(1 << 20), Errc::LatticeTooLarge);

  // Exact sizes against the oracle for every small shape.
  for (int k = 2; k <= 5; ++k) {
    for (int L = 0; L <= 6; ++L) {
      for (int m = 0; m <= L; ++m) {
        const Lattice x = lat(k, L, m, 1);
        REQUIRE(x.points_per_dim_u64() == static_cast<std::uint64_t>(oracle::ipow(k, L)));
        REQUIRE(frac(x.spacing()) == oracle::Frac(1, oracle::ipow(k, m)));
      }
    }
  }
}

TEST_CASE("point_location") {
  const Lattice a = lat(2, 3, 1, 1);
  const PointLocation p = point_location(a, LatticePoint{{3}, 2});
  CHECK(p.space == std::vector<RationalValue>{RationalValue(3, 2)});
  CHECK(p.time == RationalValue(1));

  const PointLocation o = point_location(lat(3, 2, 1, 3), LatticePoint{{0, 0, 0}, 0});
  for (const auto& x : o.space) CHECK(x == 0);
  CHECK(o.time == 0);

  for (int k : {2, 3, 7}) {
    for (int m = 0; m <= 3; ++m) {
      const Lattice x = lat(k, 3, m, 1);
      const auto top = x.points_per_dim_u64() - 1;
      const PointLocation c = point_location(x, LatticePoint{{top}, top});
      CHECK(frac(c.space[0]) == oracle::Frac(static_cast<oracle::i128>(top), oracle::ipow(k, m)));
    }
  }

  CHECK_ERRC(point_location(a, LatticePoint{{8}, 0}), Errc::IndexOutOfRange);
  CHECK_ERRC(point_location(a, LatticePoint{{0}, 8}), Errc::IndexOutOfRange);
  CHECK_ERRC(point_location(a, LatticePoint{{0, 0}, 0}), Errc::IndexOutOfRange);
}

TEST_CASE("visibility") {
  const FrameGraph g = chain();
  const FrameId f0{0, 2, "0"}, f1{1, 2, "0"};
  CHECK(g.visible(f0, f1));
  CHECK_FALSE(g.visible(f1, f0));
  CHECK(g.visible(f1, f1));
  CHECK_ERRC(g.visible(f0, FrameId{2, 3, "0"}), Errc::UnknownFrame);

  FrameGraph c(topology::Cyclic{3});
  for (int j = 0; j < 3; ++j) c.add(FrameId{j, 2, "0"});
  for (const auto& a : c.frames()) {
    for (const auto& b : c.frames()) CHECK(c.visible(a, b));
  }
}

TEST_CASE("visibility is reflexive, and antisymmetric off cyclic topologies") {
  std::vector<FrameGraph> graphs;
  graphs.push_back(chain());
  FrameGraph up(topology::OneWayInfinite{-2, topology::Direction::Ascending});
  FrameGraph down(topology::OneWayInfinite{5, topology::Direction::Descending});
  FrameGraph two(topology::TwoWayInfinite{});
  for (int j = -2; j <= 5; ++j) {
    up.add(FrameId{j, 3, "a"});
    down.add(FrameId{j, 2, "b"});
    two.add(FrameId{j, 5, "c"});
    two.add(FrameId{j, 5, "d"});
  }
  graphs.push_back(up);
  graphs.push_back(down);
  graphs.push_back(two);
  for (const auto& g : graphs) {
    for (const auto& a : g.frames()) {
      CHECK(g.visible(a, a));
      for (const auto& b : g.frames()) {
        if (a.j != b.j) CHECK(g.visible(a, b) != g.visible(b, a));
      }
    }
  }
}

TEST_CASE("topology validation") {
  CHECK_ERRC(FrameGraph(topology::FiniteChain{3, 2}), Errc::InvalidArgument);
  CHECK_ERRC(FrameGraph(topology::Cyclic{0}), Errc::InvalidArgument);
  FrameGraph g(topology::FiniteChain{0, 1});
  CHECK_ERRC(g.add(FrameId{2, 2, "0"}), Errc::InvalidArgument);
  FrameGraph up(topology::OneWayInfinite{0, topology::Direction::Ascending});
  CHECK_ERRC(up.add(FrameId{-1, 2, "0"}), Errc::InvalidArgument);
  FrameGraph c(topology::Cyclic{2});
  CHECK_ERRC(c.add(FrameId{2, 2, "0"}), Errc::InvalidArgument);
  CHECK_ERRC(g.add(FrameId{0, 2, "0"}, GaugeMap::identity(3)), Errc::DimensionMismatch);
  g.add(FrameId{0, 2, "h"}, GaugeMap::identity(2));
  CHECK(g.gauge(FrameId{0, 2, "h"}) != nullptr);
  CHECK_ERRC(g.gauge(FrameId{1, 2, "h"}), Errc::UnknownFrame);
}

TEST_CASE("parent_image_number") {
  CHECK(parent_image_number(parse("1+01", 2), 2).provenance() == RealProvenance::Constant);

  const RealRep q = parent_image_number(parse("0+3", 4), 2);
  CHECK(q.provenance() == RealProvenance::Constant);
  CHECK(format_compact(q.prefix(2)) == "0+11");

  const RealRep s = parent_image_number(parse("0+1", 6), 3);
  CHECK(s.provenance() == RealProvenance::Converted);
  CHECK(format_compact(s.prefix(3)) == "0+011");  // 1/6 = 0.0111... in base 3

  CHECK(parent_base_compatible(4, 2));
  CHECK_FALSE(parent_base_compatible(6, 3));
  CHECK(parent_base_compatible(6, 12));
}

TEST_CASE("constant parent images exactly when the bases are prime-compatible") {
  for (int child = 2; child <= 12; ++child) {
    for (int parent = 2; parent <= 12; ++parent) {
      bool compatible = true;
      for (auto p : oracle::primes_of(child)) compatible = compatible && parent % p == 0;
      REQUIRE(parent_base_compatible(child, parent) == compatible);
      // 1/child is the hardest single-digit value.
      const NumeralState a = parse("0+1", child);
      const bool constant = parent_image_number(a, parent).provenance() == RealProvenance::Constant;
      REQUIRE(constant == compatible);
    }
  }
}

TEST_CASE("lattice image components") {
  const LatticeImage img = parent_image_lattice(lat(2, 3, 3, 1));
  const NumeralState c = img.component(7);
  CHECK(format_compact(c) == "+111");
  CHECK(c.point() == 3);
  CHECK(value(c) == RationalValue(7, 8));

  const HybridTupleImage origin = img.at(LatticePoint{{0}, 0});
  CHECK(format_compact(origin.space[0]) == "+000");
  CHECK(origin.time == origin.space[0]);

  CHECK_ERRC(img.component(8), Errc::IndexOutOfRange);
  CHECK_ERRC(img.decode_component(parse("0+11", 2)), Errc::ImageMismatch);
  CHECK_ERRC(img.decode_component(parse("-111", 2)), Errc::ImageMismatch);
  CHECK_ERRC(img.decode(HybridTupleImage{{c, c}, c}), Errc::ImageMismatch);
}

TEST_CASE("lattice image is a bijection that decodes to point locations") {
  struct Shape {
    int k, L, m, D;
  };
  for (const Shape s : {Shape{2, 2, 0, 2}, Shape{2, 3, 3, 2}, Shape{3, 2, 1, 2}, Shape{5, 1, 1, 3}, Shape{2, 0, 0, 2}}) {
    const Lattice x = lat(s.k, s.L, s.m, s.D);
    const LatticeImage img = parent_image_lattice(x);
    std::set<HybridTupleImage> seen;
    const auto M = x.points_per_dim_u64();
    for (const auto& sp : space_indices(x)) {
      for (std::uint64_t t = 0; t < M; ++t) {
        const LatticePoint p{sp, t};
        const HybridTupleImage im = img.at(p);
        REQUIRE(seen.insert(im).second);
        REQUIRE(img.decode(im) == p);
        const PointLocation loc = point_location(x, p);
        for (std::size_t z = 0; z < im.space.size(); ++z) {
          const NumeralState& c = im.space[z];
          REQUIRE(c.sign() == Sign::Plus);
          REQUIRE(c.length() == s.L);
          REQUIRE(c.point() == s.m);
          REQUIRE(value(c) == loc.space[z]);
        }
        REQUIRE(value(im.time) == loc.time);
      }
    }
    CHECK(seen.size() == M * x.space_sites());
  }
}

TEST_CASE("refining lattices nest") {
  // m = floor(L/2): every coarse location is a fine location.
  for (int k : {2, 3}) {
    for (int L = 0; L < 8; ++L) {
      const Lattice coarse = lat(k, L, L / 2, 1), fine = lat(k, L + 1, (L + 1) / 2, 1);
      std::set<std::pair<long long, long long>> fine_locs;
      for (std::uint64_t l = 0; l < fine.points_per_dim_u64(); ++l) {
        const auto f = frac(point_location(fine, LatticePoint{{l}, 0}).space[0]);
        fine_locs.emplace(static_cast<long long>(f.n), static_cast<long long>(f.d));
      }
      for (std::uint64_t l = 0; l < coarse.points_per_dim_u64(); ++l) {
        const auto c = frac(point_location(coarse, LatticePoint{{l}, 0}).space[0]);
        REQUIRE(fine_locs.contains({static_cast<long long>(c.n), static_cast<long long>(c.d)}));
      }
    }
  }
}

}  // TEST_SUITE
