#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>

#include "aztec/errors.hpp"
#include "aztec/regions.hpp"

namespace aztec::regions {

namespace {

long mod2(long v) { return ((v % 2) + 2) % 2; }

}  // namespace

char klass_letter(Klass k) {
  switch (k) {
    case Klass::north: return 'N';
    case Klass::south: return 'S';
    case Klass::east: return 'E';
    case Klass::west: return 'W';
  }
  return '?';
}

Klass klass_from_letter(char c) {
  switch (c) {
    case 'N': return Klass::north;
    case 'S': return Klass::south;
    case 'E': return Klass::east;
    case 'W': return Klass::west;
    default: throw ParseError(std::string("unknown domino class '") + c + "'");
  }
}

Region::Region(std::vector<Cell> cells, int white_parity) : cells_(std::move(cells)) {
  parity_ = static_cast<int>(mod2(white_parity));
  if (cells_.empty()) throw DomainError("region has no cells");
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
    throw DomainError("region lists a cell twice");
  }
  index_cells();

  // 4-connectivity of the cells.
  std::vector<std::uint8_t> seen(mask_.size(), 0);
  std::deque<Cell> queue{cells_.front()};
  seen[cell_index(cells_.front())] = 1;
  std::size_t reached = 0;
  const long di[4] = {1, -1, 0, 0};
  const long dj[4] = {0, 0, 1, -1};
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    ++reached;
    for (int k = 0; k < 4; ++k) {
      const Cell d{c.i + di[k], c.j + dj[k]};
      if (contains(d) && !seen[cell_index(d)]) {
        seen[cell_index(d)] = 1;
        queue.push_back(d);
      }
    }
  }
  if (reached != cells_.size()) throw DomainError("region is not connected");

  // Complement connectivity inside the bounding box grown by one.
  const long w = width_ + 2;
  const long h = height_ + 2;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(w * h), 0);
  auto at = [&](long i, long j) -> std::uint8_t& { return out[(j - jmin_ + 1) * w + (i - imin_ + 1)]; };
  std::deque<Cell> q2{{imin_ - 1, jmin_ - 1}};
  at(imin_ - 1, jmin_ - 1) = 1;
  while (!q2.empty()) {
    const Cell c = q2.front();
    q2.pop_front();
    for (int k = 0; k < 4; ++k) {
      const Cell d{c.i + di[k], c.j + dj[k]};
      if (d.i < imin_ - 1 || d.i > imin_ + width_ || d.j < jmin_ - 1 || d.j > jmin_ + height_) continue;
      if (contains(d) || at(d.i, d.j)) continue;
      at(d.i, d.j) = 1;
      q2.push_back(d);
    }
  }
  for (long j = jmin_; j < jmin_ + height_; ++j)
    for (long i = imin_; i < imin_ + width_; ++i)
      if (!contains({i, j}) && !at(i, j)) throw DomainError("region has a hole (not simply connected)");
}

void Region::index_cells() {
  imin_ = cells_.front().i;
  long imax = imin_;
  jmin_ = cells_.front().j;
  long jmax = jmin_;
  for (const Cell& c : cells_) {
    imin_ = std::min(imin_, c.i);
    imax = std::max(imax, c.i);
    jmin_ = std::min(jmin_, c.j);
    jmax = std::max(jmax, c.j);
  }
  width_ = imax - imin_ + 1;
  height_ = jmax - jmin_ + 1;
  mask_.assign(static_cast<std::size_t>(width_ * height_), 0);
  for (const Cell& c : cells_) mask_[cell_index(c)] = 1;
}

Region Region::aztec_diamond(long n) {
  if (n < 1) throw DomainError("diamond order must be at least 1, got " + std::to_string(n));
  Region r;
  r.cells_.reserve(static_cast<std::size_t>(2 * n * (n + 1)));
  for (long i = -n; i < n; ++i)
    for (long j = -n; j < n; ++j)
      if (std::labs(2 * i + 1) + std::labs(2 * j + 1) <= 2 * n) r.cells_.push_back({i, j});
  r.parity_ = static_cast<int>(mod2(n));
  r.order_ = n;
  r.index_cells();
  return r;
}

bool Region::contains(Cell c) const {
  if (c.i < imin_ || c.j < jmin_ || c.i >= imin_ + width_ || c.j >= jmin_ + height_) return false;
  return mask_[cell_index(c)] != 0;
}

Color Region::color(Cell c) const {
  return mod2(c.i + c.j - parity_) == 0 ? Color::white : Color::black;
}

std::size_t Region::count(Color col) const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [&](const Cell& c) { return color(c) == col; }));
}

bool Region::has_vertex(Vertex v) const {
  return contains({v.x - 1, v.y - 1}) || contains({v.x, v.y - 1}) || contains({v.x - 1, v.y}) ||
         contains({v.x, v.y});
}

bool Region::is_boundary_vertex(Vertex v) const {
  const int inside = contains({v.x - 1, v.y - 1}) + contains({v.x, v.y - 1}) +
                     contains({v.x - 1, v.y}) + contains({v.x, v.y});
  return inside > 0 && inside < 4;
}

std::vector<Vertex> Region::vertices() const {
  std::vector<Vertex> out;
  for (long y = jmin_; y <= jmin_ + height_; ++y)
    for (long x = imin_; x <= imin_ + width_; ++x)
      if (has_vertex({x, y})) out.push_back({x, y});
  return out;
}

std::vector<Vertex> Region::boundary_vertices() const {
  std::vector<Vertex> out;
  for (long y = jmin_; y <= jmin_ + height_; ++y)
    for (long x = imin_; x <= imin_ + width_; ++x)
      if (is_boundary_vertex({x, y})) out.push_back({x, y});
  return out;
}

Region aztec_diamond(long n) { return Region::aztec_diamond(n); }

RegionPtr aztec_diamond_ptr(long n) {
  static std::mutex mu;
  static std::map<long, RegionPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const Region>(Region::aztec_diamond(n));
  return slot;
}

Color square_color(Cell c, long n) { return mod2(c.i + c.j - n) == 0 ? Color::white : Color::black; }

Klass classify_space(Cell a, Cell b, const Region& region) {
  if (b < a) std::swap(a, b);
  if (a.j == b.j && b.i == a.i + 1) {
    return region.color(a) == Color::white ? Klass::north : Klass::south;
  }
  if (a.i == b.i && b.j == a.j + 1) {
    return region.color(b) == Color::white ? Klass::west : Klass::east;
  }
  throw DomainError("cells are not adjacent");
}

Klass classify_space(Cell a, Cell b, long n) {
  if (b < a) std::swap(a, b);
  if (a.j == b.j && b.i == a.i + 1) {
    return square_color(a, n) == Color::white ? Klass::north : Klass::south;
  }
  if (a.i == b.i && b.j == a.j + 1) {
    return square_color(b, n) == Color::white ? Klass::west : Klass::east;
  }
  throw DomainError("cells are not adjacent");
}

Klass classify(const Domino& d, const Region& region) {
  return classify_space(d.anchor, d.second(), region);
}

exact::LatticeLocation space_location(const Domino& d, long n) {
  if (d.orient != Orientation::horizontal || square_color(d.anchor, n) != Color::white) {
    throw DomainError("space_location needs a north-going space");
  }
  return {d.anchor.i + 1, d.anchor.j, n};
}

exact::LatticeLocation north_equivalent(const Domino& d, long n) {
  const long i = d.anchor.i;
  const long j = d.anchor.j;
  switch (classify_space(d.anchor, d.second(), n)) {
    case Klass::north: return {i + 1, j, n};
    case Klass::east: return {-j - 1, i, n};
    case Klass::south: return {-i - 1, -j - 1, n};
    case Klass::west: return {j + 1, -i - 1, n};
  }
  return {};
}

PlacedDomino placed(const Domino& d, const Region& region) {
  const Klass k = classify(d, region);
  if (d.orient == Orientation::horizontal) return {d.anchor.i + 1, d.anchor.j, k};
  return {d.anchor.i, d.anchor.j + 1, k};
}

Domino from_placed(const PlacedDomino& p) {
  if (p.klass == Klass::north || p.klass == Klass::south) {
    return {{p.ell - 1, p.m}, Orientation::horizontal};
  }
  return {{p.ell, p.m - 1}, Orientation::vertical};
}

}  // namespace aztec::regions
