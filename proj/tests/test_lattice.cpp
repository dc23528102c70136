#include <algorithm>
#include <set>

#include "doctest.h"
#include "lpmtutte/error.hpp"
#include "lpmtutte/lattice.hpp"
#include "lpmtutte/oracle.hpp"
#include "test_support.hpp"

using namespace lpm;
using lpm::testing::pinched8;
using lpm::testing::unit_square;

namespace {

std::string error_name(auto&& fn) {
  try {
    fn();
  } catch (const LpmError& e) {
    return e.name();
  }
  return "no error";
}

}  // namespace

TEST_CASE("parse_path builds prefix tables") {
  const auto ne = MonotonePath::parse("NE");
  CHECK(ne.length() == 2);
  CHECK(ne.north_prefix(0) == 0);
  CHECK(ne.north_prefix(1) == 1);
  CHECK(ne.north_prefix(2) == 1);
  CHECK(ne.east_prefix(2) == 1);

  const auto p = MonotonePath::parse("ENENNEEN");
  CHECK(p.length() == 8);
  CHECK(p.north_count() == 4);
  CHECK(p.east_count() == 4);

  CHECK(MonotonePath::parse("nEe").to_string() == "NEE");
}

TEST_CASE("parse_path errors") {
  CHECK(error_name([] { MonotonePath::parse("NXE"); }) == "IllegalCharacter(2)");
  CHECK(error_name([] { MonotonePath::parse(""); }) == "EmptyPath");
  CHECK(error_name([] { MonotonePath::parse("NN "); }) == "IllegalCharacter(3)");
}

TEST_CASE("prefix tables are unit-step and consistent") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto region = random_region(1 + k % 30, rng);
    for (const MonotonePath* p : {&region.lower(), &region.upper()}) {
      CHECK(p->north_prefix(0) == 0);
      CHECK(p->north_prefix(p->length()) == region.r());
      for (std::size_t i = 0; i < p->length(); ++i) {
        const int d = p->north_prefix(i + 1) - p->north_prefix(i);
        CHECK((d == 0 || d == 1));
        CHECK(p->east_prefix(i) == static_cast<int>(i) - p->north_prefix(i));
      }
    }
  }
}

TEST_CASE("validate_region") {
  const auto square = unit_square();
  CHECK(square.m() == 1);
  CHECK(square.r() == 1);

  CHECK(error_name([] { LatticeRegion::parse("NE", "EN"); }) == "LowerAboveUpper(1)");
  CHECK(error_name([] { LatticeRegion::parse("NE", "NEE"); }) == "LengthMismatch");
  CHECK(error_name([] { LatticeRegion::parse("NE", "NN"); }) == "EndpointMismatch");

  const auto p8 = pinched8();
  CHECK(p8.m() == 4);
  CHECK(p8.r() == 4);
  CHECK(p8.n() == 8);
  CHECK(p8.key() == "ENENNEEN|NNEENNEE");
}

TEST_CASE("point_in_region") {
  CHECK(unit_square().contains({0, 1}));
  CHECK(unit_square().contains({0, 0}));
  CHECK_FALSE(unit_square().contains({2, 0}));
  CHECK_FALSE(unit_square().contains({-1, 0}));

  const auto p8 = pinched8();
  CHECK(p8.contains({0, 0}));
  // (1,0) is the end of the lower path's first step.
  CHECK(p8.contains({1, 0}));
  CHECK_FALSE(p8.contains({2, 0}));
  CHECK_FALSE(p8.contains({0, 3}));
  CHECK(p8.contains({2, 4}));
}

TEST_CASE("in-region points are exactly the points on full paths") {
  for (const auto& region : lpm::testing::random_regions(150, 1, 12, 3)) {
    std::set<LatticePoint> visited;
    for (const auto& path : oracle::enumerate_full_paths(region))
      for (const auto& e : oracle::path_edges(path)) {
        visited.insert(e.from);
        visited.insert(e.to);
      }
    for (int x = -1; x <= region.m() + 1; ++x)
      for (int y = -1; y <= region.r() + 1; ++y)
        CHECK(region.contains({x, y}) == (visited.count({x, y}) == 1));
  }
}

TEST_CASE("region_edges") {
  CHECK(unit_square().edges().size() == 4);
  CHECK(pinched8().edges().size() == 18);
  CHECK(LatticeRegion::parse("NE", "NE").edges().size() == 2);
}

TEST_CASE("region_edges equals union of full-path edges") {
  for (const auto& region : lpm::testing::random_regions(300, 1, 12, 5)) {
    std::set<LatticeEdge> expected;
    for (const auto& path : oracle::enumerate_full_paths(region))
      for (const auto& e : oracle::path_edges(path)) expected.insert(e);
    const auto edges = region.edges();
    CHECK(std::vector<LatticeEdge>(expected.begin(), expected.end()) == edges);
  }
}

TEST_CASE("tutte_weighting") {
  using E = LatticeEdge;
  const auto square = unit_square();
  const auto w = tutte_weighting(square);
  CHECK(w.weights().size() == 4);
  CHECK(w.weight(E::up_from({0, 0})) == WeightTag::X);
  CHECK(w.weight(E::right_from({0, 0})) == WeightTag::Y);
  CHECK(w.weight(E::right_from({0, 1})) == WeightTag::One);
  CHECK(w.weight(E::up_from({1, 0})) == WeightTag::One);

  const auto p8 = pinched8();
  const auto w4 = tutte_weighting(p8);
  std::vector<LatticeEdge> xs, ys;
  for (const auto& [e, tag] : w4.weights()) {
    if (tag == WeightTag::X) xs.push_back(e);
    if (tag == WeightTag::Y) ys.push_back(e);
  }
  CHECK(xs == std::vector<LatticeEdge>{E::up_from({0, 0}), E::up_from({0, 1}), E::up_from({2, 2}),
                                       E::up_from({2, 3})});
  CHECK(ys == std::vector<LatticeEdge>{E::right_from({0, 0}), E::right_from({1, 1}),
                                       E::right_from({2, 3}), E::right_from({3, 3})});

  const auto single = LatticeRegion::parse("NE", "NE");
  const auto ws = tutte_weighting(single);
  CHECK(ws.weight(E::up_from({0, 0})) == WeightTag::X);
  CHECK(ws.weight(E::right_from({0, 1})) == WeightTag::Y);
}

TEST_CASE("tutte_weighting agrees with the oracle's path-based weights") {
  for (const auto& region : lpm::testing::random_regions(200, 1, 20, 8)) {
    const auto w = tutte_weighting(region);
    for (const auto& [e, tag] : w.weights()) CHECK(tag == oracle::tutte_weight(region, e));
  }
}

TEST_CASE("stacks") {
  const auto p8 = pinched8();
  CHECK(p8.stacks().size() == 9);
  CHECK(p8.stack(0) == std::vector<LatticePoint>{{0, 0}});
  CHECK(p8.stack(8) == std::vector<LatticePoint>{{4, 4}});
  CHECK(p8.stack(1) == std::vector<LatticePoint>{{0, 1}, {1, 0}});

  CHECK(unit_square().stacks() ==
        StackDecomposition{{{0, 0}}, {{0, 1}, {1, 0}}, {{1, 1}}});
  CHECK(LatticeRegion::parse("NE", "NE").stacks() ==
        StackDecomposition{{{0, 0}}, {{0, 1}}, {{1, 1}}});
}

TEST_CASE("stack i lists the in-region anti-diagonal points from northwest to southeast") {
  for (const auto& region : lpm::testing::random_regions(200, 1, 24, 9)) {
    const auto stacks = region.stacks();
    REQUIRE(stacks.size() == static_cast<std::size_t>(region.n()) + 1);
    for (std::size_t i = 0; i < stacks.size(); ++i) {
      std::vector<LatticePoint> expected;
      for (int y = static_cast<int>(i); y >= 0; --y) {
        const LatticePoint p{static_cast<int>(i) - y, y};
        if (region.contains(p)) expected.push_back(p);
      }
      CHECK(stacks[i] == expected);
    }
  }
}

TEST_CASE("vertex_matrix") {
  const auto p8 = pinched8();
  const auto source = p8.vertex_matrix({0, 0});
  CHECK(source.row_count == 1);
  CHECK(source.col_count == 2);
  CHECK(source.entry(0, 0) == WeightTag::X);
  CHECK(source.entry(0, 1) == WeightTag::Y);

  const auto sink = p8.vertex_matrix({4, 4});
  CHECK(sink.row_count == 2);
  CHECK(sink.col_count == 1);
  CHECK(sink.entry(0, 0) == WeightTag::One);
  CHECK(sink.entry(1, 0) == WeightTag::One);

  // interior vertex with up edge One and right edge Y
  const auto inner = p8.vertex_matrix({1, 1});
  CHECK(inner.row_count == 2);
  CHECK(inner.col_count == 2);
  CHECK(inner.incoming()[0] == LatticeEdge::right_from({0, 1}));  // left first
  CHECK(inner.incoming()[1] == LatticeEdge::up_from({1, 0}));     // then below
  CHECK(inner.outgoing()[0] == LatticeEdge::up_from({1, 1}));     // up first
  CHECK(inner.outgoing()[1] == LatticeEdge::right_from({1, 1}));  // then right
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(inner.entry(r, 0) == WeightTag::One);
    CHECK(inner.entry(r, 1) == WeightTag::Y);
  }

  const auto w = tutte_weighting(p8);
  for (const auto& stack : p8.stacks())
    for (const auto& v : stack) {
      const auto a = p8.vertex_matrix(v);
      const auto b = vertex_matrix(w, v);
      CHECK(a.col_tags == b.col_tags);
    }
}

TEST_CASE("geometry invariants on random regions") {
  for (const auto& region : lpm::testing::random_regions(300, 1, 30, 21)) {
    const int n = region.n();
    for (int i = 0; i <= n; ++i) {
      const int width = region.band_width(static_cast<std::size_t>(i));
      CHECK(width >= 0);
      CHECK(width <= std::min(i, n - i));
    }

    std::map<LatticeEdge, int> out_count;
    std::size_t in_total = 0;
    for (std::size_t i = 0; i < region.stack_count(); ++i) {
      std::vector<LatticeEdge> outgoing, incoming_next;
      for (const auto& v : region.stack(i)) {
        const auto vm = region.vertex_matrix(v);
        for (const auto& e : vm.outgoing()) {
          ++out_count[e];
          outgoing.push_back(e);
        }
        in_total += vm.in_degree;
        const bool source = v == LatticePoint{0, 0};
        const bool sink = v == LatticePoint{region.m(), region.r()};
        CHECK(vm.row_count == (source ? 1 : vm.in_degree));
        CHECK(vm.col_count == (sink ? 1 : vm.out_degree));
      }
      if (i + 1 < region.stack_count())
        for (const auto& v : region.stack(i + 1))
          for (const auto& e : region.vertex_matrix(v).incoming()) incoming_next.push_back(e);
      // boundary consistency between consecutive stacks
      CHECK(outgoing == incoming_next);
    }

    const auto edges = region.edges();
    CHECK(out_count.size() == edges.size());
    CHECK(in_total == edges.size());
    for (const auto& e : edges) CHECK(out_count[e] == 1);
  }
}

TEST_CASE("transposed region swaps roles") {
  const auto t = pinched8().transposed();
  CHECK(t.lower().to_string() == "EENNEENN");
  CHECK(t.upper().to_string() == "NENEENNE");
  CHECK(t.transposed() == pinched8());
}

TEST_CASE("random_region is valid and deterministic") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    seen.insert(random_region(2, rng).key());
  }
  const std::set<std::string> allowed{"EN|NE", "NE|NE", "EN|EN", "NN|NN", "EE|EE"};
  CHECK(std::includes(allowed.begin(), allowed.end(), seen.begin(), seen.end()));
  CHECK(seen.size() == allowed.size());

  std::mt19937_64 a(99), b(99);
  CHECK(random_region(17, a) == random_region(17, b));
}

TEST_CASE("widest_region") {
  const auto w = widest_region(6);
  CHECK(w.key() == "EEENNN|NNNEEE");
  CHECK(w.band_width(3) == 3);
}
