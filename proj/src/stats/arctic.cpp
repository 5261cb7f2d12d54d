#include <algorithm>
#include <cmath>
#include <numbers>

#include "aztec/errors.hpp"
#include "aztec/stats.hpp"

namespace aztec::stats {

using regions::Cell;
using regions::Orientation;
using regions::PolarLabel;

double ellipse_distance(double x, double y, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("ellipse needs 0 < p < 1");
  const double a = std::sqrt(p);
  const double b = std::sqrt(1.0 - p);
  // the nearest point lies in the quadrant of (|x|, |y|)
  const double px = std::abs(x), py = std::abs(y);
  auto dist = [&](double th) { return std::hypot(a * std::cos(th) - px, b * std::sin(th) - py); };
  constexpr int coarse = 256;
  const double step = std::numbers::pi / 2 / coarse;
  int best = 0;
  for (int k = 1; k <= coarse; ++k)
    if (dist(k * step) < dist(best * step)) best = k;
  double lo = std::max(0.0, (best - 1) * step), hi = std::min(std::numbers::pi / 2, (best + 1) * step);
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  for (int it = 0; it < 80; ++it) {
    if (dist(c) < dist(d)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - g * (hi - lo);
    d = lo + g * (hi - lo);
  }
  return std::min(dist((lo + hi) / 2), dist(best * step));
}

BoundaryReport arctic_report(const regions::Tiling& t, const std::optional<exact::BiasValue>& bias) {
  const auto& region = t.region();
  if (!region.order_hint()) throw DomainError("arctic report needs an Aztec diamond tiling");
  const double n = static_cast<double>(*region.order_hint());
  BoundaryReport rep;
  rep.bias = bias ? bias->to_double() : 0.5;

  const auto ds = t.dominos();
  const auto labels = regions::polar_classify(t);
  std::vector<long> owner(static_cast<std::size_t>(region.cell_slots()), -1);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    owner[region.cell_index(ds[k].anchor)] = static_cast<long>(k);
    owner[region.cell_index(ds[k].second())] = static_cast<long>(k);
  }
  bool any_temperate = false;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (labels[k] != PolarLabel::temperate) continue;
    any_temperate = true;
    bool frontier = false;
    for (const Cell c : {ds[k].anchor, ds[k].second()}) {
      for (const Cell nb : {Cell{c.i + 1, c.j}, Cell{c.i - 1, c.j}, Cell{c.i, c.j + 1}, Cell{c.i, c.j - 1}}) {
        if (!region.contains(nb)) continue;
        const long o = owner[region.cell_index(nb)];
        if (o != static_cast<long>(k) && labels[o] != PolarLabel::temperate) frontier = true;
      }
    }
    if (!frontier) continue;
    const bool h = ds[k].orient == Orientation::horizontal;
    const double cx = ds[k].anchor.i + (h ? 1.0 : 0.5);
    const double cy = ds[k].anchor.j + (h ? 0.5 : 1.0);
    const asym::NormalizedPoint pt{cx / n, cy / n};
    rep.boundary_points.push_back(pt);
    rep.max_deviation = std::max(rep.max_deviation, ellipse_distance(pt.x, pt.y, rep.bias));
  }
  rep.degenerate = !any_temperate;
  return rep;
}

std::vector<BoundaryReport> arctic_reports(long n, const std::optional<exact::BiasValue>& bias, long samples,
                                           RandomSeed seed, Backend backend) {
  if (samples < 1) throw DomainError("samples must be >= 1");
  const exact::BiasValue p = bias.value_or(exact::BiasValue::uniform());
  std::vector<BoundaryReport> out(static_cast<std::size_t>(samples));
  const bool par = backend == Backend::openmp;
#pragma omp parallel for schedule(dynamic, 2) if (par)
  for (long k = 0; k < samples; ++k) {
    const auto st = shuffle::run(n, p, sample_seed(seed, k), {Backend::serial, false, {}});
    out[k] = arctic_report(st.tiling(), bias);
  }
  return out;
}

double median_deviation(const std::vector<BoundaryReport>& reports) {
  if (reports.empty()) throw DomainError("median of no reports");
  std::vector<double> d;
  for (const auto& r : reports) d.push_back(r.max_deviation);
  std::sort(d.begin(), d.end());
  const std::size_t h = d.size() / 2;
  return d.size() % 2 ? d[h] : 0.5 * (d[h - 1] + d[h]);
}

}  // namespace aztec::stats
