#include <algorithm>
#include <cmath>
#include <map>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

namespace aztec::oracle {

using regions::HeightFunction;
using regions::kUnset;
using regions::Link;

std::vector<HeightFunction> enumerate_extensions(const regions::PartialHeightFunction& f, const OracleLimits& limits) {
  const auto& region = f.region_ptr();
  const regions::Vertex anchor = regions::default_anchor(*region);
  const auto fixed = f.get(anchor);
  std::vector<HeightFunction> out;
  OracleLimits l = limits;
  l.max_tilings = std::min(limits.max_tilings, limits.max_materialized);
  for_each_tiling(region, [&](const std::vector<Link>& links, long) {
    const Tiling t = Tiling::from_links(region, links);
    HeightFunction h = fixed ? regions::height_from_tiling(t, anchor, *fixed) : regions::height_from_tiling(t);
    const auto& raw = f.raw();
    for (std::size_t k = 0; k < raw.size(); ++k)
      if (raw[k] != kUnset && raw[k] != h.raw()[k]) return;
    out.push_back(std::move(h));
  }, l);
  return out;
}

std::vector<ExactRational> expected_heights(const regions::PartialHeightFunction& f, const OracleLimits& limits) {
  const auto ext = enumerate_extensions(f, limits);
  if (ext.empty()) throw InfeasibleError("no tiling agrees with the given heights");
  std::vector<ExactInteger> sums(f.raw().size(), 0);
  for (const auto& h : ext)
    for (std::size_t k = 0; k < sums.size(); ++k)
      if (h.raw()[k] != kUnset) sums[k] += h.raw()[k];
  std::vector<ExactRational> out(sums.size());
  for (std::size_t k = 0; k < sums.size(); ++k) {
    out[k] = ExactRational(sums[k], ExactInteger(static_cast<unsigned long>(ext.size())));
    out[k].canonicalize();
  }
  return out;
}

EntropyEstimate patch_entropy(const std::vector<Tiling>& samples, const std::vector<regions::Cell>& patch) {
  EntropyEstimate est;
  est.samples = samples.size();
  est.area = patch.size();
  if (samples.empty() || patch.empty()) {
    est.low_power = true;
    return est;
  }
  std::vector<regions::Cell> cells = patch;
  std::sort(cells.begin(), cells.end());
  auto inside = [&](const regions::Cell& c) { return std::binary_search(cells.begin(), cells.end(), c); };
  std::map<std::vector<Domino>, std::size_t> freq;
  for (const Tiling& t : samples) {
    std::vector<Domino> key;
    for (const regions::Cell& c : cells) {
      const auto d = t.domino_at(c);
      if (d && d->anchor == c && inside(d->second())) key.push_back(*d);
    }
    freq[key] += 1;
  }
  double h = 0.0;
  const double n = static_cast<double>(samples.size());
  for (const auto& [k, count] : freq) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  est.distinct = freq.size();
  est.bits_per_square = h / static_cast<double>(patch.size());
  // Plug-in entropy is badly biased once most configurations are seen once.
  est.low_power = 5 * freq.size() > samples.size();
  return est;
}

}  // namespace aztec::oracle
