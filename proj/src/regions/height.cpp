#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <ostream>
#include <queue>

#include "aztec/errors.hpp"
#include "aztec/regions.hpp"

namespace aztec::regions {

namespace {

std::string vstr(Vertex v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

// One lattice edge u -> v, pointing east or north, with the cell on its left
// and the cell on its right.
struct Edge {
  Vertex u;
  Vertex v;
  Cell left;
  Cell right;
};

// Edges touching at least one cell of the region.
template <class F>
void for_each_edge(const Region& r, F&& f) {
  for (long y = r.jmin(); y <= r.jmin() + r.height(); ++y) {
    for (long x = r.imin(); x <= r.imin() + r.width(); ++x) {
      const Edge east{{x, y}, {x + 1, y}, {x, y}, {x, y - 1}};
      if (r.contains(east.left) || r.contains(east.right)) f(east);
      const Edge north{{x, y}, {x, y + 1}, {x - 1, y}, {x, y}};
      if (r.contains(north.left) || r.contains(north.right)) f(north);
    }
  }
}

bool interior(const Region& r, const Edge& e) { return r.contains(e.left) && r.contains(e.right); }

long base_step(const Region& r, const Edge& e) { return r.color(e.left) == Color::black ? 1 : -1; }

bool bisected(const Tiling& t, const Edge& e) {
  if (!interior(t.region(), e)) return false;
  const auto d = t.domino_at(e.left);
  return d && (d->second() == e.right || d->anchor == e.right);
}

// Adjacency with the increment h(to) - h(from) along each edge direction.
template <class StepFn>
std::vector<long> propagate(const Region& r, Vertex anchor, long value, StepFn&& step_of, bool boundary_only) {
  std::vector<std::vector<std::pair<long, long>>> adj(static_cast<std::size_t>(r.vertex_slots()));
  for_each_edge(r, [&](const Edge& e) {
    if (boundary_only && interior(r, e)) return;
    const long d = step_of(e);
    adj[r.vertex_index(e.u)].push_back({r.vertex_index(e.v), d});
    adj[r.vertex_index(e.v)].push_back({r.vertex_index(e.u), -d});
  });
  std::vector<long> h(static_cast<std::size_t>(r.vertex_slots()), kUnset);
  if (!r.has_vertex(anchor)) throw DomainError("anchor " + vstr(anchor) + " is not a vertex of the region");
  if (boundary_only && !r.is_boundary_vertex(anchor)) {
    throw DomainError("anchor " + vstr(anchor) + " is not on the boundary");
  }
  const long a = r.vertex_index(anchor);
  h[a] = value;
  std::deque<long> queue{a};
  while (!queue.empty()) {
    const long u = queue.front();
    queue.pop_front();
    for (auto [w, d] : adj[u]) {
      if (h[w] == kUnset) {
        h[w] = h[u] + d;
        queue.push_back(w);
      } else if (h[w] != h[u] + d) {
        throw IntegrityError("height increments are inconsistent around " + vstr(r.vertex_at(w)));
      }
    }
  }
  return h;
}

}  // namespace

// ---- PartialHeightFunction ----

PartialHeightFunction::PartialHeightFunction(RegionPtr region) : region_(std::move(region)) {
  values_.assign(static_cast<std::size_t>(region_->vertex_slots()), kUnset);
}

void PartialHeightFunction::set(Vertex v, long h) {
  if (!region_->has_vertex(v)) throw DomainError(vstr(v) + " is not a vertex of the region");
  values_[region_->vertex_index(v)] = h;
}

std::optional<long> PartialHeightFunction::get(Vertex v) const {
  if (!region_->has_vertex(v)) return std::nullopt;
  const long h = values_[region_->vertex_index(v)];
  if (h == kUnset) return std::nullopt;
  return h;
}

std::size_t PartialHeightFunction::defined_count() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](long h) { return h != kUnset; }));
}

// ---- HeightFunction ----

HeightFunction::HeightFunction(RegionPtr region, std::vector<long> values)
    : region_(std::move(region)), values_(std::move(values)) {
  const Region& r = *region_;
  if (static_cast<long>(values_.size()) != r.vertex_slots()) throw IntegrityError("height array does not match the region");
  for (long k = 0; k < r.vertex_slots(); ++k) {
    const bool inside = r.has_vertex(r.vertex_at(k));
    if (inside != (values_[k] != kUnset)) throw IntegrityError("height defined off the region or missing at " + vstr(r.vertex_at(k)));
  }
  for_each_edge(r, [&](const Edge& e) {
    const long d = values_[r.vertex_index(e.v)] - values_[r.vertex_index(e.u)];
    const long b = base_step(r, e);
    const bool ok = d == b || (interior(r, e) && d == -3 * b);
    if (!ok) {
      throw IntegrityError("edge " + vstr(e.u) + "->" + vstr(e.v) + " has increment " + std::to_string(d));
    }
  });
}

long HeightFunction::at(Vertex v) const {
  if (!region_->has_vertex(v)) throw DomainError(vstr(v) + " is not a vertex of the region");
  return values_[region_->vertex_index(v)];
}

std::vector<std::pair<Vertex, long>> HeightFunction::entries() const {
  std::vector<std::pair<Vertex, long>> out;
  for (long k = 0; k < region_->vertex_slots(); ++k)
    if (values_[k] != kUnset) out.push_back({region_->vertex_at(k), values_[k]});
  return out;
}

Vertex default_anchor(const Region& region) {
  if (region.order_hint()) return {-*region.order_hint(), 0};
  for (long k = 0; k < region.vertex_slots(); ++k)
    if (region.has_vertex(region.vertex_at(k))) return region.vertex_at(k);
  throw DomainError("region has no vertices");
}

HeightFunction height_from_tiling(const Tiling& t) { return height_from_tiling(t, default_anchor(t.region()), 0); }

HeightFunction height_from_tiling(const Tiling& t, Vertex anchor, long value) {
  const Region& r = t.region();
  auto h = propagate(r, anchor, value, [&](const Edge& e) {
    const long b = base_step(r, e);
    return bisected(t, e) ? -3 * b : b;
  }, false);
  return HeightFunction(t.region_ptr(), std::move(h));
}

Tiling tiling_from_height(const HeightFunction& h) {
  const Region& r = h.region();
  std::vector<Link> links(static_cast<std::size_t>(r.cell_slots()), Link::none);
  for_each_edge(r, [&](const Edge& e) {
    const long d = h.raw()[r.vertex_index(e.v)] - h.raw()[r.vertex_index(e.u)];
    if (std::labs(d) != 3) return;
    Link& ll = links[r.cell_index(e.left)];
    Link& lr = links[r.cell_index(e.right)];
    if (ll != Link::none || lr != Link::none) throw IntegrityError("a cell has two bisected edges");
    if (e.u.y == e.v.y) {  // east edge: left cell above, right cell below
      ll = Link::down;
      lr = Link::up;
    } else {  // north edge: left cell west, right cell east
      ll = Link::right;
      lr = Link::left;
    }
  });
  return Tiling::from_links(h.region_ptr(), std::move(links));
}

PartialHeightFunction boundary_heights(const RegionPtr& region) {
  return boundary_heights(region, default_anchor(*region), 0);
}

PartialHeightFunction boundary_heights(const RegionPtr& region, Vertex anchor, long value) {
  const Region& r = *region;
  std::vector<long> h;
  try {
    h = propagate(r, anchor, value, [&](const Edge& e) { return base_step(r, e); }, true);
  } catch (const IntegrityError&) {
    throw InfeasibleError("boundary heights do not close up: the region has unequal color counts");
  }
  PartialHeightFunction f(region);
  for (long k = 0; k < r.vertex_slots(); ++k)
    if (h[k] != kUnset) f.set(r.vertex_at(k), h[k]);
  return f;
}

namespace {

struct Arc {
  long to;
  long w;
};

std::vector<std::vector<Arc>> constraint_graph(const Region& r, bool reversed) {
  std::vector<std::vector<Arc>> g(static_cast<std::size_t>(r.vertex_slots()));
  for_each_edge(r, [&](const Edge& e) {
    const long u = r.vertex_index(e.u);
    const long v = r.vertex_index(e.v);
    // h(v) - h(u) in {b, -3b}: h(v) <= h(u) + fwd, h(u) <= h(v) + back.
    const long b = base_step(r, e);
    const long fwd = b == 1 ? 1 : 3;
    const long back = b == 1 ? 3 : 1;
    if (!reversed) {
      g[u].push_back({v, fwd});
      g[v].push_back({u, back});
    } else {
      g[v].push_back({u, fwd});
      g[u].push_back({v, back});
    }
  });
  return g;
}

// min over fixed w of (start(w) + dist(w -> v)), recording the source.
std::vector<long> multi_source(const Region& r, const std::vector<std::vector<Arc>>& g,
                               const std::vector<long>& start, std::vector<long>& origin) {
  std::vector<long> dist(start.size(), kUnset);
  origin.assign(start.size(), -1);
  using Item = std::pair<long, long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (long k = 0; k < static_cast<long>(start.size()); ++k)
    if (start[k] != kUnset) {
      dist[k] = start[k];
      origin[k] = k;
      pq.push({start[k], k});
    }
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const Arc& a : g[u]) {
      const long nd = d + a.w;
      if (dist[a.to] == kUnset || nd < dist[a.to]) {
        dist[a.to] = nd;
        origin[a.to] = origin[u];
        pq.push({nd, a.to});
      }
    }
  }
  (void)r;
  return dist;
}

HeightFunction extend(const PartialHeightFunction& f, bool maximal) {
  const Region& r = f.region();
  for (const Vertex& v : r.boundary_vertices()) {
    if (!f.get(v)) throw DomainError("partial height function leaves boundary vertex " + vstr(v) + " unset");
  }
  std::vector<long> start = f.raw();
  if (!maximal)
    for (long& s : start)
      if (s != kUnset) s = -s;
  std::vector<long> origin;
  auto dist = multi_source(r, constraint_graph(r, !maximal), start, origin);
  for (long k = 0; k < r.vertex_slots(); ++k) {
    if (start[k] != kUnset && dist[k] < start[k]) {
      throw InfeasibleError("boundary data infeasible: constraints from " + vstr(r.vertex_at(origin[k])) +
                            " to " + vstr(r.vertex_at(k)) + " close a violated cycle");
    }
  }
  if (!maximal)
    for (long& d : dist)
      if (d != kUnset) d = -d;
  try {
    return HeightFunction(f.region_ptr(), std::move(dist));
  } catch (const IntegrityError& e) {
    throw InfeasibleError(std::string("boundary data is not consistent modulo 4: ") + e.what());
  }
}

}  // namespace

HeightFunction max_extension(const PartialHeightFunction& f) { return extend(f, true); }
HeightFunction min_extension(const PartialHeightFunction& f) { return extend(f, false); }

std::size_t lipschitz_violations(const HeightFunction& h, long stride) {
  if (stride < 1) stride = 1;
  const auto entries = h.entries();
  std::size_t bad = 0;
  for (std::size_t a = 0; a < entries.size(); a += static_cast<std::size_t>(stride)) {
    const auto& [u, hu] = entries[a];
    for (const auto& [v, hv] : entries) {
      const long d = std::max(std::labs(u.x - v.x), std::labs(u.y - v.y));
      if (std::labs(hu - hv) > 2 * d + 1) ++bad;
    }
  }
  return bad;
}

std::size_t mod4_mismatches(const HeightFunction& a, const HeightFunction& b) {
  if (!(a.region() == b.region())) throw DomainError("height functions live on different regions");
  std::size_t bad = 0;
  for (std::size_t k = 0; k < a.raw().size(); ++k) {
    const long x = a.raw()[k];
    const long y = b.raw()[k];
    if (x == kUnset) continue;
    if ((((x - y) % 4) + 4) % 4 != 0) ++bad;
  }
  return bad;
}

void write_height_csv(std::ostream& os, const HeightFunction& h) {
  os << "vx,vy,h\n";
  for (const auto& [v, val] : h.entries()) os << v.x << ',' << v.y << ',' << val << '\n';
}

}  // namespace aztec::regions
