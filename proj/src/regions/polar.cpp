#include <deque>

#include "aztec/errors.hpp"
#include "aztec/regions.hpp"

namespace aztec::regions {

namespace {

PolarLabel label_of(Klass k) {
  switch (k) {
    case Klass::north: return PolarLabel::north;
    case Klass::south: return PolarLabel::south;
    case Klass::east: return PolarLabel::east;
    case Klass::west: return PolarLabel::west;
  }
  return PolarLabel::temperate;
}

}  // namespace

std::vector<PolarLabel> polar_classify(const Tiling& t) {
  const Region& r = t.region();
  const auto ds = t.dominos();
  std::vector<long> owner(static_cast<std::size_t>(r.cell_slots()), -1);
  std::vector<Klass> klass(ds.size());
  for (std::size_t k = 0; k < ds.size(); ++k) {
    owner[r.cell_index(ds[k].anchor)] = static_cast<long>(k);
    owner[r.cell_index(ds[k].second())] = static_cast<long>(k);
    klass[k] = classify(ds[k], r);
  }
  std::vector<PolarLabel> labels(ds.size(), PolarLabel::temperate);
  std::deque<std::size_t> queue;
  const long di[4] = {1, -1, 0, 0};
  const long dj[4] = {0, 0, 1, -1};
  auto neighbours = [&](std::size_t k, auto&& visit) {
    for (const Cell c : {ds[k].anchor, ds[k].second()})
      for (int s = 0; s < 4; ++s) visit(Cell{c.i + di[s], c.j + dj[s]});
  };
  for (std::size_t k = 0; k < ds.size(); ++k) {
    bool on_boundary = false;
    neighbours(k, [&](Cell c) { on_boundary = on_boundary || !r.contains(c); });
    if (on_boundary) {
      labels[k] = label_of(klass[k]);
      queue.push_back(k);
    }
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    neighbours(k, [&](Cell c) {
      if (!r.contains(c)) return;
      const long o = owner[r.cell_index(c)];
      if (o < 0 || labels[o] != PolarLabel::temperate || klass[o] != klass[k]) return;
      labels[o] = labels[k];
      queue.push_back(static_cast<std::size_t>(o));
    });
  }
  return labels;
}

std::vector<PolarLabel> polar_classify_by_height(const Tiling& t) {
  const Region& r = t.region();
  if (!r.order_hint()) throw DomainError("height-based polar classification needs an Aztec diamond");
  const long n = *r.order_hint();
  const HeightFunction h = height_from_tiling(t);
  const HeightFunction lo = height_from_tiling(all_horizontal(n));
  const HeightFunction hi = height_from_tiling(all_vertical(n));
  const auto ds = t.dominos();
  std::vector<PolarLabel> labels(ds.size(), PolarLabel::temperate);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const Domino& d = ds[k];
    const long w = d.orient == Orientation::horizontal ? 2 : 1;
    const long ht = d.orient == Orientation::horizontal ? 1 : 2;
    bool match_lo = true;
    bool match_hi = true;
    for (long dx = 0; dx <= w; ++dx)
      for (long dy = 0; dy <= ht; ++dy) {
        const Vertex v{d.anchor.i + dx, d.anchor.j + dy};
        const long hv = h.at(v);
        match_lo = match_lo && hv == lo.at(v);
        match_hi = match_hi && hv == hi.at(v);
      }
    const Klass k2 = classify(d, r);
    const bool horiz = k2 == Klass::north || k2 == Klass::south;
    if ((horiz && match_lo) || (!horiz && match_hi)) labels[k] = label_of(k2);
  }
  return labels;
}

}  // namespace aztec::regions
