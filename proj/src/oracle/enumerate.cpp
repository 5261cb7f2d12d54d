#include <algorithm>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

namespace aztec::oracle {

using regions::Cell;
using regions::Link;
using regions::Region;

ExactInteger count_tilings(const Region& r) {
  const long w = r.width();
  if (w > 22) throw ResourceError("region too wide for the transfer-matrix count (" + std::to_string(w) + " columns)");
  const std::size_t states = std::size_t{1} << w;
  std::vector<ExactInteger> cur(states, 0);
  std::vector<ExactInteger> next(states, 0);
  cur[0] = 1;
  for (long j = r.jmin(); j < r.jmin() + r.height(); ++j) {
    for (long i = r.imin(); i < r.imin() + r.width(); ++i) {
      const long c = i - r.imin();
      const std::size_t bit = std::size_t{1} << c;
      const std::size_t right = std::size_t{1} << (c + 1);
      const bool inside = r.contains({i, j});
      const bool up_ok = r.contains({i, j + 1});
      const bool right_ok = c + 1 < w && r.contains({i + 1, j});
      for (auto& x : next) x = 0;
      for (std::size_t s = 0; s < states; ++s) {
        if (cur[s] == 0) continue;
        if (!inside) {
          if (s & bit) continue;  // something points into a hole
          next[s] += cur[s];
          continue;
        }
        if (s & bit) {
          next[s & ~bit] += cur[s];
          continue;
        }
        if (up_ok) next[s | bit] += cur[s];
        if (right_ok && !(s & right)) next[s | right] += cur[s];
      }
      cur.swap(next);
    }
  }
  return cur[0];
}

namespace {

struct Walker {
  const Region& r;
  std::vector<Link> links;
  const std::function<void(const std::vector<Link>&, long)>& visit;
  std::uint64_t leaves = 0;
  long horizontal = 0;

  void run(std::size_t pos) {
    const auto& cells = r.cells();
    while (pos < cells.size() && links[r.cell_index(cells[pos])] != Link::none) ++pos;
    if (pos == cells.size()) {
      ++leaves;
      visit(links, horizontal);
      return;
    }
    const Cell c = cells[pos];
    const long ci = r.cell_index(c);
    const Cell rc{c.i + 1, c.j};
    if (r.contains(rc) && links[r.cell_index(rc)] == Link::none) {
      links[ci] = Link::right;
      links[r.cell_index(rc)] = Link::left;
      horizontal += 1;
      run(pos + 1);
      horizontal -= 1;
      links[r.cell_index(rc)] = Link::none;
    }
    const Cell uc{c.i, c.j + 1};
    if (r.contains(uc) && links[r.cell_index(uc)] == Link::none) {
      links[ci] = Link::up;
      links[r.cell_index(uc)] = Link::down;
      run(pos + 1);
      links[r.cell_index(uc)] = Link::none;
    }
    links[ci] = Link::none;
  }
};

void check_cap(const Region& r, std::uint64_t cap) {
  const ExactInteger count = count_tilings(r);
  if (count > ExactInteger(std::to_string(cap))) {
    throw ResourceError("region has " + count.get_str() + " tilings, above the enumeration cap of " +
                        std::to_string(cap));
  }
}

}  // namespace

std::uint64_t for_each_tiling(const RegionPtr& region,
                              const std::function<void(const std::vector<Link>&, long)>& visit,
                              const OracleLimits& limits) {
  check_cap(*region, limits.max_tilings);
  Walker w{*region, std::vector<Link>(static_cast<std::size_t>(region->cell_slots()), Link::none), visit};
  w.run(0);
  return w.leaves;
}

TilingEnumeration enumerate_tilings(const RegionPtr& region, const OracleLimits& limits) {
  OracleLimits l = limits;
  l.max_tilings = std::min(limits.max_tilings, limits.max_materialized);
  TilingEnumeration out;
  for_each_tiling(region, [&](const std::vector<Link>& links, long) {
    out.tilings.push_back(Tiling::from_links(region, links));
  }, l);
  out.count = static_cast<unsigned long>(out.tilings.size());
  return out;
}

TilingIndex::TilingIndex(const RegionPtr& region, const OracleLimits& limits) : region_(region) {
  tilings_ = enumerate_tilings(region, limits).tilings;
  for (std::size_t k = 0; k < tilings_.size(); ++k) lookup_.emplace(tilings_[k].links(), k);
}

std::size_t TilingIndex::index_of(const Tiling& t) const {
  if (!(t.region() == *region_)) throw DomainError("tiling belongs to a different region");
  auto it = lookup_.find(t.links());
  if (it == lookup_.end()) throw IntegrityError("tiling not found in the enumeration");
  return it->second;
}

}  // namespace aztec::oracle
