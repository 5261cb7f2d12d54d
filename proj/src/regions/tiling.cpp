#include <algorithm>

#include "aztec/errors.hpp"
#include "aztec/regions.hpp"

namespace aztec::regions {

namespace {

Cell step(Cell c, Link l) {
  switch (l) {
    case Link::right: return {c.i + 1, c.j};
    case Link::up: return {c.i, c.j + 1};
    case Link::left: return {c.i - 1, c.j};
    case Link::down: return {c.i, c.j - 1};
    case Link::none: break;
  }
  return c;
}

Link opposite(Link l) {
  switch (l) {
    case Link::right: return Link::left;
    case Link::up: return Link::down;
    case Link::left: return Link::right;
    case Link::down: return Link::up;
    case Link::none: break;
  }
  return Link::none;
}

}  // namespace

Tiling::Tiling(RegionPtr region, std::vector<Link> links, bool check)
    : region_(std::move(region)), links_(std::move(links)) {
  if (check) validate();
}

Tiling::Tiling(RegionPtr region, const std::vector<Domino>& dominos) : region_(std::move(region)) {
  if (!region_) throw DomainError("tiling without a region");
  links_.assign(static_cast<std::size_t>(region_->cell_slots()), Link::none);
  for (const Domino& d : dominos) {
    const Cell a = d.anchor;
    const Cell b = d.second();
    if (!region_->contains(a) || !region_->contains(b)) {
      throw IntegrityError("domino at (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                           ") leaves the region");
    }
    Link& la = links_[region_->cell_index(a)];
    Link& lb = links_[region_->cell_index(b)];
    if (la != Link::none || lb != Link::none) {
      throw IntegrityError("dominos overlap at (" + std::to_string(a.i) + "," + std::to_string(a.j) + ")");
    }
    la = d.orient == Orientation::horizontal ? Link::right : Link::up;
    lb = opposite(la);
  }
  validate();
}

Tiling Tiling::from_links(RegionPtr region, std::vector<Link> links) {
  if (!region) throw DomainError("tiling without a region");
  if (static_cast<long>(links.size()) != region->cell_slots()) {
    throw IntegrityError("link array does not match the region");
  }
  return Tiling(std::move(region), std::move(links), true);
}

void Tiling::validate() const {
  for (const Cell& c : region_->cells()) {
    const Link l = links_[region_->cell_index(c)];
    if (l == Link::none) {
      throw IntegrityError("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") is uncovered");
    }
    const Cell d = step(c, l);
    if (!region_->contains(d) || links_[region_->cell_index(d)] != opposite(l)) {
      throw IntegrityError("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                           ") has an inconsistent partner");
    }
  }
  for (long k = 0; k < region_->cell_slots(); ++k) {
    const Cell c{region_->imin() + k % region_->width(), region_->jmin() + k / region_->width()};
    if (links_[k] != Link::none && !region_->contains(c)) throw IntegrityError("link outside the region");
  }
}

std::vector<Domino> Tiling::dominos() const {
  std::vector<Domino> out;
  out.reserve(domino_count());
  for (const Cell& c : region_->cells()) {
    const Link l = links_[region_->cell_index(c)];
    if (l == Link::right) out.push_back({c, Orientation::horizontal});
    if (l == Link::up) out.push_back({c, Orientation::vertical});
  }
  return out;
}

Link Tiling::link(Cell c) const {
  if (!region_->contains(c)) return Link::none;
  return links_[region_->cell_index(c)];
}

std::optional<Domino> Tiling::domino_at(Cell c) const {
  switch (link(c)) {
    case Link::right: return Domino{c, Orientation::horizontal};
    case Link::up: return Domino{c, Orientation::vertical};
    case Link::left: return Domino{{c.i - 1, c.j}, Orientation::horizontal};
    case Link::down: return Domino{{c.i, c.j - 1}, Orientation::vertical};
    case Link::none: break;
  }
  return std::nullopt;
}

Tiling all_horizontal(long n) {
  auto region = aztec_diamond_ptr(n);
  std::vector<Domino> ds;
  for (long j = -n; j < n; ++j) {
    const long half = j >= 0 ? n - j : n + j + 1;  // cells per side of the row
    for (long i = -half; i < half; i += 2) ds.push_back({{i, j}, Orientation::horizontal});
  }
  return Tiling(region, ds);
}

Tiling all_vertical(long n) {
  auto region = aztec_diamond_ptr(n);
  std::vector<Domino> ds;
  for (long i = -n; i < n; ++i) {
    const long half = i >= 0 ? n - i : n + i + 1;
    for (long j = -half; j < half; j += 2) ds.push_back({{i, j}, Orientation::vertical});
  }
  return Tiling(region, ds);
}

}  // namespace aztec::regions
