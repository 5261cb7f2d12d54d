#include <cstdlib>
#include <set>
#include <sstream>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/regions.hpp"
#include "doctest.h"

using namespace aztec;
using namespace aztec::regions;

namespace {
RegionPtr diamond(long n) { return std::make_shared<const Region>(Region::aztec_diamond(n)); }
}  // namespace

TEST_CASE("diamond geometry and coloring") {
  CHECK(aztec_diamond(1).size() == 4);
  CHECK(aztec_diamond(2).size() == 12);
  CHECK(aztec_diamond(64).size() == 8320);
  CHECK_THROWS_AS(aztec_diamond(0), DomainError);
  CHECK(square_color({-1, 0}, 1) == Color::white);
  CHECK(square_color({-1, 1}, 2) == Color::white);
  for (long n = 1; n <= 6; ++n) {
    const Region r = aztec_diamond(n);
    CHECK(r.count(Color::white) == r.count(Color::black));
    // leftmost square of each top-half row is white
    for (long j = 0; j < n; ++j) CHECK(r.color({-(n - j), j}) == Color::white);
    for (const Cell& c : r.cells()) {
      CHECK(r.color(c) != r.color({c.i + 1, c.j}));
      CHECK(r.color(c) == square_color(c, n));
    }
  }
}

TEST_CASE("region validation") {
  CHECK_THROWS_AS(Region({}, 0), DomainError);
  CHECK_THROWS_AS(Region({{0, 0}, {2, 0}}, 0), DomainError);
  std::vector<Cell> ring;
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      if (i != 1 || j != 1) ring.push_back({i, j});
  CHECK_THROWS_AS(Region(ring, 0), DomainError);
  const Region rect({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 0);
  CHECK(rect.size() == 4);
  CHECK(rect.boundary_vertices().size() == 8);
  CHECK(rect.vertices().size() == 9);
}

TEST_CASE("domino classes and locations") {
  CHECK(classify_space({-1, 0}, {0, 0}, 1) == Klass::north);
  CHECK(classify_space({-1, -1}, {-1, 0}, 1) == Klass::west);
  CHECK_THROWS_AS(classify_space({0, 0}, {1, 1}, 1), DomainError);
  // the single north-going space of order 1, and the three of order 2
  std::set<std::pair<long, long>> north;
  for (long n : {1L, 2L}) {
    north.clear();
    const Region r = aztec_diamond(n);
    for (const Cell& c : r.cells()) {
      const Cell rc{c.i + 1, c.j};
      if (r.contains(rc) && classify_space(c, rc, n) == Klass::north) {
        const auto loc = space_location({c, Orientation::horizontal}, n);
        north.insert({loc.ell, loc.m});
        CHECK(exact::is_valid_location(loc));
      }
    }
    if (n == 1) CHECK(north == std::set<std::pair<long, long>>{{0, 0}});
    if (n == 2) CHECK(north == std::set<std::pair<long, long>>{{0, 1}, {0, -1}, {1, 0}, {-1, 0}});
  }
  CHECK_THROWS_AS(space_location({{0, 0}, Orientation::vertical}, 1), DomainError);
}

TEST_CASE("quarter turns cycle classes N -> E -> S -> W") {
  for (long n = 1; n <= 3; ++n) {
    const Region r = aztec_diamond(n);
    for (const Cell& c : r.cells())
      for (const Cell& d : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
        if (!r.contains(d)) continue;
        // clockwise turn about the origin maps the cell [i,i+1]x[j,j+1] to [j,j+1]x[-i-1,-i]
        const Cell rc{c.j, -c.i - 1};
        const Cell rd{d.j, -d.i - 1};
        const Klass k = classify_space(c, d, n);
        const Klass kr = classify_space(rc, rd, n);
        const Klass expect = k == Klass::north   ? Klass::east
                             : k == Klass::east  ? Klass::south
                             : k == Klass::south ? Klass::west
                                                 : Klass::north;
        CHECK(kr == expect);
      }
  }
}

TEST_CASE("rotated spaces have the placement probability of their north equivalent") {
  for (long n = 1; n <= 5; ++n) {
    const auto stats = oracle::exact_statistics(diamond(n));
    for (const auto& [d, p] : stats.placement) CHECK(p == exact::placement_probability(north_equivalent(d, n)));
  }
}

TEST_CASE("heights of the extremal tilings") {
  for (long n = 1; n <= 6; ++n) {
    const HeightFunction lo = height_from_tiling(all_horizontal(n));
    const HeightFunction hi = height_from_tiling(all_vertical(n));
    CHECK(lo.at({-n, 0}) == 0);
    CHECK(lo.at({0, n}) == 2 * n);
    CHECK(lo.at({n, 0}) == 0);
    CHECK(lo.at({0, -n}) == 2 * n);
    for (const Vertex& v : lo.region().boundary_vertices()) CHECK(lo.at(v) == hi.at(v));
    for (const auto& [v, h] : lo.entries()) CHECK(h <= hi.at(v));
  }
  CHECK(height_from_tiling(all_horizontal(1)).at({0, 0}) == -1);
  CHECK(height_from_tiling(all_vertical(1)).at({0, 0}) == 3);
}

TEST_CASE("tiling <-> height round trips, order <= 3") {
  std::size_t total = 0;
  for (long n = 1; n <= 3; ++n) {
    const auto en = oracle::enumerate_tilings(diamond(n));
    const HeightFunction lo = height_from_tiling(all_horizontal(n));
    const HeightFunction hi = height_from_tiling(all_vertical(n));
    const auto bnd = boundary_heights(diamond(n));
    const HeightFunction mx = max_extension(bnd);
    const HeightFunction mn = min_extension(bnd);
    CHECK(mx == hi);
    CHECK(mn == lo);
    for (const Tiling& t : en.tilings) {
      const HeightFunction h = height_from_tiling(t);
      CHECK(tiling_from_height(h) == t);
      CHECK(lipschitz_violations(h) == 0);
      CHECK(mod4_mismatches(h, lo) == 0);
      for (const auto& [v, val] : h.entries()) {
        CHECK(val >= lo.at(v));
        CHECK(val <= hi.at(v));
      }
      for (const Vertex& v : h.region().boundary_vertices()) CHECK(h.at(v) == *bnd.get(v));
      ++total;
    }
  }
  CHECK(total == 74);
}

TEST_CASE("small non-diamond regions round trip") {
  // every simply connected polyomino of a 2x4 and a 3x4 box with at most 12 cells, sampled
  const Region rect23({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}, 0);
  auto rp = std::make_shared<const Region>(rect23);
  const auto en = oracle::enumerate_tilings(rp);
  CHECK(en.tilings.size() == 3);
  for (const Tiling& t : en.tilings) CHECK(tiling_from_height(height_from_tiling(t)) == t);
}

TEST_CASE("extensions on a diamond with a row removed are unique") {
  // rows j <= -1 of the order-3 diamond together with rows j >= 1 shifted down
  const Region d3 = aztec_diamond(3);
  std::vector<Cell> cells;
  for (const Cell& c : d3.cells()) {
    if (c.j < 0) cells.push_back(c);
    if (c.j > 0) cells.push_back({c.i, c.j - 1});
  }
  auto r = std::make_shared<const Region>(Region(cells, 1));
  CHECK(oracle::count_tilings(*r) == 1);
  const auto bnd = boundary_heights(r);
  const HeightFunction mx = max_extension(bnd);
  const HeightFunction mn = min_extension(bnd);
  CHECK(mx == mn);
  for (const Domino& d : tiling_from_height(mx).dominos()) CHECK(d.orient == Orientation::horizontal);
}

TEST_CASE("infeasible boundary data is reported") {
  auto r = diamond(2);
  auto f = boundary_heights(r);
  f.set({0, 0}, 40);
  CHECK_THROWS_AS(max_extension(f), InfeasibleError);
  auto g = boundary_heights(r);
  g.set({0, 0}, 2);  // wrong residue modulo 4
  CHECK_THROWS_AS(min_extension(g), InfeasibleError);
  PartialHeightFunction empty(r);
  CHECK_THROWS_AS(max_extension(empty), DomainError);
}

TEST_CASE("invalid height data is rejected") {
  const HeightFunction h = height_from_tiling(all_horizontal(2));
  auto raw = h.raw();
  raw[h.region().vertex_index({0, 0})] += 4;
  CHECK_THROWS_AS(HeightFunction(h.region_ptr(), raw), IntegrityError);
}

TEST_CASE("polar classification: chains agree with heights, order <= 4") {
  for (long n = 1; n <= 4; ++n) {
    const auto en = oracle::enumerate_tilings(diamond(n));
    for (const Tiling& t : en.tilings) CHECK(polar_classify(t) == polar_classify_by_height(t));
    const auto lab = polar_classify(all_horizontal(n));
    const auto ds = all_horizontal(n).dominos();
    for (std::size_t k = 0; k < ds.size(); ++k) {
      CHECK(lab[k] != PolarLabel::temperate);
      CHECK(lab[k] == (ds[k].anchor.j >= 0 ? PolarLabel::north : PolarLabel::south));
    }
  }
}

TEST_CASE("tiling text format round trip") {
  const auto en = oracle::enumerate_tilings(diamond(3));
  for (const Tiling& t : en.tilings) {
    std::stringstream ss;
    write_tiling(ss, t, "aztec test");
    CHECK(read_tiling(ss) == t);
  }
  const Region rect({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 1);
  const Tiling t(std::make_shared<const Region>(rect), {{{0, 0}, Orientation::vertical}, {{1, 0}, Orientation::vertical}});
  std::stringstream ss;
  write_tiling(ss, t);
  CHECK(ss.str().rfind("region 2 1\n", 0) == 0);
  CHECK(read_tiling(ss) == t);
  std::stringstream bad("aztec 1\n1 0 S\n");
  CHECK_THROWS(read_tiling(bad));
  std::stringstream bad2("aztec 1\n1 0 N\n");
  CHECK_THROWS_AS(read_tiling(bad2), IntegrityError);  // leaves two cells uncovered
  std::stringstream reg("# comment\nregion 2 0\n0 0\n1 0\n");
  CHECK(read_region(reg).size() == 2);
}
