#pragma once

// Regions of the square lattice, domino tilings, and height functions.
//
// A cell (i, j) is the unit square [i, i+1] x [j, j+1], centre (i+1/2, j+1/2).
// Vertices are integer points. The Aztec diamond of order n holds the cells
// with |i + 1/2| + |j + 1/2| <= n; a cell is white iff i + j == n (mod 2),
// which makes the leftmost square of every top-half row white.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aztec/exact.hpp"

namespace aztec::regions {

struct Cell {
  long i = 0;
  long j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Vertex {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class Color : std::uint8_t { white, black };
enum class Klass : std::uint8_t { north, south, east, west };
enum class Orientation : std::uint8_t { horizontal, vertical };

char klass_letter(Klass k);
Klass klass_from_letter(char c);

// A domino space: anchor is the left cell of a horizontal pair or the lower
// cell of a vertical pair.
struct Domino {
  Cell anchor;
  Orientation orient = Orientation::horizontal;

  Cell second() const {
    return orient == Orientation::horizontal ? Cell{anchor.i + 1, anchor.j}
                                             : Cell{anchor.i, anchor.j + 1};
  }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

class Region {
 public:
  // Validates that the cells form a non-empty, 4-connected region whose
  // complement is 4-connected. white_parity: a cell is white iff
  // i + j == white_parity (mod 2).
  Region(std::vector<Cell> cells, int white_parity);
  static Region aztec_diamond(long n);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::optional<long> order_hint() const { return order_; }
  int white_parity() const { return parity_; }

  bool contains(Cell c) const;
  // Extended checkerboard; defined for every cell of the plane.
  Color color(Cell c) const;
  std::size_t count(Color col) const;

  bool has_vertex(Vertex v) const;
  bool is_boundary_vertex(Vertex v) const;
  std::vector<Vertex> vertices() const;
  std::vector<Vertex> boundary_vertices() const;

  // Dense indexing helpers over the bounding box.
  long cell_index(Cell c) const { return (c.j - jmin_) * width_ + (c.i - imin_); }
  long vertex_index(Vertex v) const { return (v.y - jmin_) * (width_ + 1) + (v.x - imin_); }
  Vertex vertex_at(long index) const {
    return {imin_ + index % (width_ + 1), jmin_ + index / (width_ + 1)};
  }
  long cell_slots() const { return width_ * height_; }
  long vertex_slots() const { return (width_ + 1) * (height_ + 1); }
  long imin() const { return imin_; }
  long jmin() const { return jmin_; }
  long width() const { return width_; }
  long height() const { return height_; }

  friend bool operator==(const Region& a, const Region& b) {
    return a.parity_ == b.parity_ && a.cells_ == b.cells_;
  }

 private:
  Region() = default;
  void index_cells();

  std::vector<Cell> cells_;  // sorted by (i, j)
  std::vector<std::uint8_t> mask_;
  std::optional<long> order_;
  int parity_ = 0;
  long imin_ = 0, jmin_ = 0, width_ = 0, height_ = 0;
};

using RegionPtr = std::shared_ptr<const Region>;

// Partner direction of a cell inside a tiling.
enum class Link : std::uint8_t { none, right, up, left, down };

class Tiling {
 public:
  // Validates that the dominos partition the region.
  Tiling(RegionPtr region, const std::vector<Domino>& dominos);
  // Takes per-cell partner links indexed by Region::cell_index.
  static Tiling from_links(RegionPtr region, std::vector<Link> links);

  const Region& region() const { return *region_; }
  const RegionPtr& region_ptr() const { return region_; }

  // Dominos ordered by anchor (i, then j).
  std::vector<Domino> dominos() const;
  std::size_t domino_count() const { return region_->size() / 2; }
  Link link(Cell c) const;
  std::optional<Domino> domino_at(Cell c) const;
  const std::vector<Link>& links() const { return links_; }

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return *a.region_ == *b.region_ && a.links_ == b.links_;
  }

 private:
  Tiling(RegionPtr region, std::vector<Link> links, bool validate);
  void validate() const;

  RegionPtr region_;
  std::vector<Link> links_;
};

Region aztec_diamond(long n);
// Shared immutable diamond, cached per order.
RegionPtr aztec_diamond_ptr(long n);
Color square_color(Cell c, long n);
Klass classify_space(Cell a, Cell b, const Region& region);
Klass classify_space(Cell a, Cell b, long n);
Klass classify(const Domino& d, const Region& region);

// (l, m) of a north-going space of the order-n diamond.
exact::LatticeLocation space_location(const Domino& d, long n);
// The north-going location with the same placement probability, by rotation.
exact::LatticeLocation north_equivalent(const Domino& d, long n);

// Serialized position: bottom-edge midpoint of horizontal dominos, left-edge
// midpoint of vertical ones.
struct PlacedDomino {
  long ell = 0;
  long m = 0;
  Klass klass = Klass::north;
};
PlacedDomino placed(const Domino& d, const Region& region);
Domino from_placed(const PlacedDomino& p);

// Extremal tilings of an Aztec diamond.
Tiling all_horizontal(long n);
Tiling all_vertical(long n);

// ---- height functions --------------------------------------------------

inline constexpr long kUnset = std::numeric_limits<long>::min();

class PartialHeightFunction {
 public:
  explicit PartialHeightFunction(RegionPtr region);
  const Region& region() const { return *region_; }
  const RegionPtr& region_ptr() const { return region_; }
  void set(Vertex v, long h);
  std::optional<long> get(Vertex v) const;
  const std::vector<long>& raw() const { return values_; }
  std::size_t defined_count() const;

 private:
  RegionPtr region_;
  std::vector<long> values_;
};

class HeightFunction {
 public:
  // Validates every edge increment (+-1 on the boundary, +1/-3 or -1/+3
  // inside) and that exactly one edge of each cell has |increment| 3.
  HeightFunction(RegionPtr region, std::vector<long> values);
  const Region& region() const { return *region_; }
  const RegionPtr& region_ptr() const { return region_; }
  long at(Vertex v) const;
  const std::vector<long>& raw() const { return values_; }
  std::vector<std::pair<Vertex, long>> entries() const;

  friend bool operator==(const HeightFunction& a, const HeightFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  RegionPtr region_;
  std::vector<long> values_;
};

// Default anchor: (-n, 0) -> 0 for a diamond, else the smallest vertex -> 0.
Vertex default_anchor(const Region& region);
HeightFunction height_from_tiling(const Tiling& t);
HeightFunction height_from_tiling(const Tiling& t, Vertex anchor, long value);
Tiling tiling_from_height(const HeightFunction& h);

// Heights along the boundary, fixed by the region alone.
PartialHeightFunction boundary_heights(const RegionPtr& region);
PartialHeightFunction boundary_heights(const RegionPtr& region, Vertex anchor, long value);

HeightFunction max_extension(const PartialHeightFunction& f);
HeightFunction min_extension(const PartialHeightFunction& f);

// |h(u) - h(v)| <= 2 d(u, v) + 1 in sup distance, checked from every
// stride-th vertex (stride 1 checks all pairs). Returns the violation count.
std::size_t lipschitz_violations(const HeightFunction& h, long stride = 1);
// Count of vertices where a and b differ modulo 4.
std::size_t mod4_mismatches(const HeightFunction& a, const HeightFunction& b);

void write_height_csv(std::ostream& os, const HeightFunction& h);

// ---- polar regions -----------------------------------------------------

enum class PolarLabel : std::uint8_t { north, south, east, west, temperate };

// Labels aligned with t.dominos(): a domino is polar when a chain of
// adjacent dominos of its own class joins it to the boundary.
std::vector<PolarLabel> polar_classify(const Tiling& t);
// Same labels from heights: N/S polar iff the heights on the domino agree
// with the all-horizontal tiling, E/W with the all-vertical one.
std::vector<PolarLabel> polar_classify_by_height(const Tiling& t);

// ---- text format -------------------------------------------------------

void write_tiling(std::ostream& os, const Tiling& t, const std::string& comment = "");
Tiling read_tiling(std::istream& is);
Tiling read_tiling_file(const std::string& path);
// A bare region: same header, then one "i j" line per cell.
Region read_region(std::istream& is);
Region read_region_file(const std::string& path);

}  // namespace aztec::regions
