#include <cmath>
#include <ostream>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"

namespace aztec::oracle {

using regions::Cell;
using regions::Link;
using regions::Orientation;
using regions::Region;

namespace {

// Per-tiling weights by number of horizontal dominos, normalized so that the
// smallest H gets weight 1.
std::vector<ExactRational> bucket_weights(const std::vector<std::uint64_t>& totals,
                                          const std::optional<exact::BiasValue>& bias) {
  std::vector<ExactRational> w(totals.size(), 1);
  if (!bias || bias->is_uniform()) return w;
  long hmin = -1;
  for (std::size_t h = 0; h < totals.size(); ++h)
    if (totals[h] > 0) {
      hmin = static_cast<long>(h);
      break;
    }
  const ExactRational q = bias->value() / (1 - bias->value());
  for (std::size_t h = 0; h < totals.size(); ++h) {
    if (totals[h] == 0) continue;
    const long diff = static_cast<long>(h) - hmin;
    if (diff % 2 != 0) throw IntegrityError("horizontal counts of different parity; biased weights undefined");
    ExactRational v = 1;
    for (long k = 0; k < diff / 2; ++k) v *= q;
    w[h] = v;
  }
  return w;
}

ExactRational weighted(const std::vector<std::uint64_t>& counts, const std::vector<ExactRational>& w) {
  ExactRational s = 0;
  for (std::size_t h = 0; h < counts.size(); ++h)
    if (counts[h]) s += w[h] * ExactRational(static_cast<unsigned long>(counts[h]));
  return s;
}

}  // namespace

ExactRational ExactStatistics::probability(const Domino& d) const {
  auto it = placement.find(d);
  return it == placement.end() ? ExactRational(0) : it->second;
}

ExactStatistics exact_statistics(const RegionPtr& region, const std::optional<exact::BiasValue>& bias,
                                 const OracleLimits& limits) {
  const Region& r = *region;
  const std::size_t buckets = r.size() / 2 + 1;
  const std::size_t slots = static_cast<std::size_t>(r.cell_slots());
  std::vector<std::uint64_t> totals(buckets, 0);
  // space counts: [cell slot][orientation][H]; block counts: [cell slot][hh/vv][H]
  std::vector<std::uint64_t> space(slots * 2 * buckets, 0);
  std::vector<std::uint64_t> block(slots * 2 * buckets, 0);
  const auto& cells = r.cells();
  std::vector<long> idx(cells.size());
  std::vector<long> above(cells.size(), -1);
  std::vector<long> beside(cells.size(), -1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    idx[k] = r.cell_index(cells[k]);
    const Cell a{cells[k].i, cells[k].j + 1};
    const Cell b{cells[k].i + 1, cells[k].j};
    if (r.contains(a)) above[k] = r.cell_index(a);
    if (r.contains(b)) beside[k] = r.cell_index(b);
  }
  const std::uint64_t total = for_each_tiling(region, [&](const std::vector<Link>& links, long h) {
    totals[h] += 1;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const long ci = idx[k];
      const Link l = links[ci];
      if (l == Link::right) {
        space[(ci * 2 + 0) * buckets + h] += 1;
        if (above[k] >= 0 && links[above[k]] == Link::right) block[(ci * 2 + 0) * buckets + h] += 1;
      } else if (l == Link::up) {
        space[(ci * 2 + 1) * buckets + h] += 1;
        if (beside[k] >= 0 && links[beside[k]] == Link::up) block[(ci * 2 + 1) * buckets + h] += 1;
      }
    }
  }, limits);

  ExactStatistics out;
  out.tiling_count = static_cast<unsigned long>(total);
  out.bias = bias;
  if (total == 0) throw InfeasibleError("region has no tilings");
  const auto w = bucket_weights(totals, bias);
  const ExactRational z = weighted(totals, w);
  std::vector<std::uint64_t> tmp(buckets);
  auto prob = [&](const std::vector<std::uint64_t>& arr, std::size_t base) {
    for (std::size_t h = 0; h < buckets; ++h) tmp[h] = arr[base * buckets + h];
    return ExactRational(weighted(tmp, w) / z);
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell c = cells[k];
    const std::size_t ci = static_cast<std::size_t>(idx[k]);
    if (beside[k] >= 0) out.placement[{c, Orientation::horizontal}] = prob(space, ci * 2 + 0);
    if (above[k] >= 0) out.placement[{c, Orientation::vertical}] = prob(space, ci * 2 + 1);
    const Cell tr{c.i + 1, c.j + 1};
    if (above[k] >= 0 && beside[k] >= 0 && r.contains(tr)) {
      const Cell tl{c.i, c.j + 1};
      const Cell br{c.i + 1, c.j};
      out.pair[{Domino{c, Orientation::horizontal}, Domino{tl, Orientation::horizontal}}] = prob(block, ci * 2 + 0);
      out.pair[{Domino{c, Orientation::vertical}, Domino{br, Orientation::vertical}}] = prob(block, ci * 2 + 1);
    }
  }
  return out;
}

std::vector<ExactRational> tiling_distribution(const RegionPtr& region, const std::optional<exact::BiasValue>& bias,
                                               const OracleLimits& limits) {
  std::vector<long> hs;
  OracleLimits l = limits;
  l.max_tilings = std::min(limits.max_tilings, limits.max_materialized);
  for_each_tiling(region, [&](const std::vector<Link>&, long h) { hs.push_back(h); }, l);
  std::vector<std::uint64_t> totals(region->size() / 2 + 1, 0);
  for (long h : hs) totals[h] += 1;
  const auto w = bucket_weights(totals, bias);
  const ExactRational z = weighted(totals, w);
  std::vector<ExactRational> out;
  out.reserve(hs.size());
  for (long h : hs) out.push_back(w[h] / z);
  return out;
}

bool block_lemma_check(const ExactStatistics& stats, const Region& region) {
  for (const Cell& c : region.cells()) {
    const Cell tl{c.i, c.j + 1};
    const Cell br{c.i + 1, c.j};
    const Cell tr{c.i + 1, c.j + 1};
    if (!region.contains(tl) || !region.contains(br) || !region.contains(tr)) continue;
    const ExactRational p_cd = stats.probability({c, Orientation::horizontal});
    const ExactRational p_ab = stats.probability({tl, Orientation::horizontal});
    const ExactRational p_ac = stats.probability({c, Orientation::vertical});
    const ExactRational p_bd = stats.probability({br, Orientation::vertical});
    const ExactRational hh = stats.pair.at({Domino{c, Orientation::horizontal}, Domino{tl, Orientation::horizontal}});
    const ExactRational vv = stats.pair.at({Domino{c, Orientation::vertical}, Domino{br, Orientation::vertical}});
    const ExactRational rhs = p_ab * p_cd + p_ac * p_bd;
    if (hh != vv || hh != rhs) return false;
  }
  return true;
}

bool block_lemma_check(const RegionPtr& region, const OracleLimits& limits) {
  return block_lemma_check(exact_statistics(region, std::nullopt, limits), *region);
}

void write_statistics_csv(std::ostream& os, const ExactStatistics& stats, const Region& region) {
  os << "kind,i,j,orientation,class,probability\n";
  for (const auto& [d, p] : stats.placement) {
    os << "space," << d.anchor.i << ',' << d.anchor.j << ','
       << (d.orient == Orientation::horizontal ? 'H' : 'V') << ','
       << regions::klass_letter(regions::classify(d, region)) << ',' << exact::to_string(p) << '\n';
  }
  for (const auto& [pr, p] : stats.pair) {
    os << (pr.first.orient == Orientation::horizontal ? "pair_hh," : "pair_vv,") << pr.first.anchor.i << ','
       << pr.first.anchor.j << ',' << (pr.first.orient == Orientation::horizontal ? 'H' : 'V') << ",-,"
       << exact::to_string(p) << '\n';
  }
}

}  // namespace aztec::oracle
