#include <cmath>
#include <deque>
#include <numbers>

#include "aztec/errors.hpp"
#include "aztec/stats.hpp"

namespace aztec::stats {

using regions::Cell;
using regions::HeightFunction;
using regions::Region;

namespace {

// Edge u -> u + (dx, dy) lies in the region when a cell beside it does.
bool edge_inside(const Region& r, Vertex u, long dx, long dy) {
  if (dx != 0) {
    const long x = std::min(u.x, u.x + dx);
    return r.contains({x, u.y}) || r.contains({x, u.y - 1});
  }
  const long y = std::min(u.y, u.y + dy);
  return r.contains({u.x, y}) || r.contains({u.x - 1, y});
}

std::vector<long> bfs(const Region& r, const std::vector<Vertex>& sources) {
  std::vector<long> dist(static_cast<std::size_t>(r.vertex_slots()), -1);
  std::deque<Vertex> queue;
  for (const Vertex& s : sources) {
    dist[r.vertex_index(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (auto [dx, dy] : {std::pair{1L, 0L}, {-1L, 0L}, {0L, 1L}, {0L, -1L}}) {
      const Vertex v{u.x + dx, u.y + dy};
      if (!r.has_vertex(v) || !edge_inside(r, u, dx, dy)) continue;
      long& d = dist[r.vertex_index(v)];
      if (d >= 0) continue;
      d = dist[r.vertex_index(u)] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

std::vector<double> heights_at(long n, const std::vector<Vertex>& vs, long samples, RandomSeed seed,
                               const exact::BiasValue& p, Backend backend) {
  std::vector<double> out(static_cast<std::size_t>(samples * vs.size()));
  const bool par = backend == Backend::openmp;
#pragma omp parallel for schedule(dynamic, 4) if (par)
  for (long k = 0; k < samples; ++k) {
    const auto st = shuffle::run(n, p, sample_seed(seed, k), {Backend::serial, false, {}});
    const HeightFunction h = regions::height_from_tiling(st.tiling());
    for (std::size_t q = 0; q < vs.size(); ++q) out[k * vs.size() + q] = static_cast<double>(h.at(vs[q]));
  }
  return out;
}

VarianceReport summarize(std::vector<double> xs, long m) {
  VarianceReport rep;
  rep.m = m;
  rep.samples = static_cast<long>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  rep.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - rep.mean) * (x - rep.mean);
  rep.sample_variance = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0.0;
  rep.bound = 64.0 * static_cast<double>(m);
  for (double c : {2.0, 4.0, 6.0}) {
    const double cut = c * std::sqrt(static_cast<double>(m));
    long hits = 0;
    for (double x : xs) hits += std::abs(x - rep.mean) > cut;
    rep.tails.push_back({c, static_cast<double>(hits) / static_cast<double>(xs.size()), 2.0 * std::exp(-c * c / 32.0)});
  }
  return rep;
}

}  // namespace

long boundary_path_length(const Region& r, Vertex v) {
  if (!r.has_vertex(v)) throw DomainError("vertex is not in the region");
  return bfs(r, r.boundary_vertices())[r.vertex_index(v)];
}

long path_length(const Region& r, Vertex v, Vertex w) {
  if (!r.has_vertex(v) || !r.has_vertex(w)) throw DomainError("vertex is not in the region");
  return bfs(r, {v})[r.vertex_index(w)];
}

bool VarianceReport::within_bounds() const {
  if (!(sample_variance <= bound)) return false;
  for (const TailRow& t : tails)
    if (!(t.frequency <= t.bound)) return false;
  return true;
}

VarianceReport height_concentration(long n, Vertex v, long samples, RandomSeed seed,
                                    const std::optional<exact::BiasValue>& bias, Backend backend) {
  if (samples < 2) throw DomainError("variance needs at least two samples");
  const auto region = regions::aztec_diamond_ptr(n);
  if (!region->has_vertex(v) || region->is_boundary_vertex(v)) throw DomainError("vertex must be interior");
  const long m = boundary_path_length(*region, v);
  auto rep = summarize(heights_at(n, {v}, samples, seed, bias.value_or(exact::BiasValue::uniform()), backend), m);
  rep.vertex = v;
  return rep;
}

VarianceReport difference_concentration(long n, Vertex v, Vertex w, long samples, RandomSeed seed, Backend backend) {
  if (samples < 2) throw DomainError("variance needs at least two samples");
  const auto region = regions::aztec_diamond_ptr(n);
  for (const Vertex& u : {v, w})
    if (!region->has_vertex(u) || region->is_boundary_vertex(u)) throw DomainError("vertices must be interior");
  const long m = path_length(*region, v, w);
  const auto hs = heights_at(n, {v, w}, samples, seed, exact::BiasValue::uniform(), backend);
  std::vector<double> diff(static_cast<std::size_t>(samples));
  for (long k = 0; k < samples; ++k) diff[k] = hs[2 * k] - hs[2 * k + 1];
  auto rep = summarize(std::move(diff), m);
  rep.vertex = v;
  rep.other = w;
  return rep;
}

MeanHeightReport mean_height_report(long n, long samples, RandomSeed seed, double margin, Backend backend) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  const auto region = regions::aztec_diamond_ptr(n);
  const auto verts = region->vertices();
  std::vector<double> sum(verts.size(), 0.0);
  const bool par = backend == Backend::openmp;
#pragma omp parallel if (par)
  {
    std::vector<double> local(verts.size(), 0.0);
#pragma omp for schedule(dynamic, 4)
    for (long k = 0; k < samples; ++k) {
      const auto st = shuffle::run(n, exact::BiasValue::uniform(), sample_seed(seed, k), {Backend::serial, false, {}});
      const HeightFunction h = regions::height_from_tiling(st.tiling());
      for (std::size_t q = 0; q < verts.size(); ++q) local[q] += static_cast<double>(h.at(verts[q]));
    }
#pragma omp critical
    for (std::size_t q = 0; q < verts.size(); ++q) sum[q] += local[q];
  }
  MeanHeightReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.margin = margin;
  const double nd = static_cast<double>(n);
  for (std::size_t q = 0; q < verts.size(); ++q) {
    const double mean = sum[q] / static_cast<double>(samples) / nd;
    rep.mean.emplace_back(verts[q], mean);
    const asym::NormalizedPoint pt{verts[q].x / nd, verts[q].y / nd};
    if (std::abs(pt.x) + std::abs(pt.y) >= 1.0) continue;
    if (std::abs(std::hypot(pt.x, pt.y) - std::numbers::sqrt2 / 2) < margin) continue;
    const double dev = std::abs(mean - asym::average_height(pt));
    ++rep.compared;
    if (dev > rep.sup_deviation) {
      rep.sup_deviation = dev;
      rep.worst = verts[q];
    }
  }
  return rep;
}

}  // namespace aztec::stats
