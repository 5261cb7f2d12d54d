#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "aztec/errors.hpp"
#include "aztec/stats.hpp"

namespace aztec::stats {

using regions::Cell;
using regions::Orientation;
using regions::Region;

RandomSeed sample_seed(RandomSeed seed, long k) {
  return shuffle::counter_random(seed, 0x5eedULL, k, 0);
}

double chi_square_pvalue(const std::vector<double>& observed, const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.size() < 2)
    throw DomainError("chi-square needs matching tables with at least two cells");
  double stat = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    if (!(expected[k] > 0.0)) throw DomainError("chi-square expected counts must be positive");
    const double d = observed[k] - expected[k];
    stat += d * d / expected[k];
  }
  const boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double standard_error(double f, long samples) {
  if (samples < 1) throw DomainError("standard error needs at least one sample");
  return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

double binomial_z(long count, long trials, double p) {
  if (trials < 1 || count < 0 || count > trials) throw DomainError("binomial count out of range");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("binomial z needs 0 < p < 1");
  const boost::math::binomial_distribution<double> bin(static_cast<double>(trials), p);
  const boost::math::normal norm;
  const double mean = static_cast<double>(trials) * p;
  const double c = static_cast<double>(count);
  // tails below ~1e-300 saturate; no test gets near that
  constexpr double floor = 1e-300;
  if (c >= mean) {
    const double tail = count == 0 ? 1.0 : boost::math::cdf(boost::math::complement(bin, c - 1.0));
    if (tail >= 0.5) return 0.0;
    return boost::math::quantile(boost::math::complement(norm, std::max(tail, floor)));
  }
  const double tail = boost::math::cdf(bin, c);
  if (tail >= 0.5) return 0.0;
  return boost::math::quantile(norm, std::max(tail, floor));
}

EmpiricalGrid::EmpiricalGrid(long n, long samples, std::vector<long> counts)
    : n_(n), samples_(samples), region_(regions::aztec_diamond_ptr(n)), counts_(std::move(counts)) {
  if (samples < 1) throw DomainError("an empirical grid needs at least one sample");
  if (static_cast<long>(counts_.size()) != 2 * region_->cell_slots())
    throw DomainError("count table does not match the diamond");
}

long EmpiricalGrid::slot(const Region& r, const Domino& d) {
  if (!r.contains(d.anchor) || !r.contains(d.second())) throw DomainError("not a domino space of the region");
  return 2 * r.cell_index(d.anchor) + (d.orient == Orientation::vertical ? 1 : 0);
}

long EmpiricalGrid::count(const Domino& d) const { return counts_[slot(*region_, d)]; }

double EmpiricalGrid::frequency(const Domino& d) const {
  return static_cast<double>(count(d)) / static_cast<double>(samples_);
}

double EmpiricalGrid::standard_error(const Domino& d) const {
  return stats::standard_error(frequency(d), samples_);
}

std::vector<Domino> EmpiricalGrid::spaces() const {
  std::vector<Domino> out;
  for (const Cell& c : region_->cells())
    for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
      const Domino d{c, o};
      if (region_->contains(d.second())) out.push_back(d);
    }
  return out;
}

EmpiricalGrid empirical_placement(long n, const std::optional<exact::BiasValue>& bias, long samples,
                                  RandomSeed seed, Backend backend) {
  if (n < 1) throw DomainError("order must be >= 1");
  if (samples < 1) throw DomainError("samples must be >= 1");
  const auto region = regions::aztec_diamond_ptr(n);
  const exact::BiasValue p = bias.value_or(exact::BiasValue::uniform());
  const long slots = 2 * region->cell_slots();
  std::vector<long> total(static_cast<std::size_t>(slots), 0);
  const bool par = backend == Backend::openmp;
#pragma omp parallel if (par)
  {
    std::vector<long> local(static_cast<std::size_t>(slots), 0);
#pragma omp for schedule(dynamic, 8)
    for (long k = 0; k < samples; ++k) {
      shuffle::ShuffleState st(n, sample_seed(seed, k), p);
      for (long s = 0; s < n; ++s) st.step(Backend::serial);
      for (long j = -n; j < n; ++j)
        for (long i = -n; i < n; ++i) {
          const std::uint8_t c = st.code({i, j});
          if (c == shuffle::ShuffleState::empty) continue;
          const long at = 2 * region->cell_index({i, j}) + (c == shuffle::ShuffleState::vertical ? 1 : 0);
          ++local[at];
        }
    }
#pragma omp critical
    for (long s = 0; s < slots; ++s) total[s] += local[s];
  }
  return EmpiricalGrid(n, samples, std::move(total));
}

ExactComparison compare_with_exact(const EmpiricalGrid& g, const std::optional<exact::BiasValue>& bias) {
  const long n = g.order();
  const exact::BiasValue p = bias.value_or(exact::BiasValue::uniform());
  const exact::PlacementGrid ns(n, p);
  const exact::PlacementGrid ew(n, exact::BiasValue(1 - p.value()));
  const Region& r = *regions::aztec_diamond_ptr(n);
  ExactComparison out;
  for (const Domino& d : g.spaces()) {
    const auto k = regions::classify(d, r);
    const auto loc = regions::north_equivalent(d, n);
    const auto& grid = (k == regions::Klass::north || k == regions::Klass::south) ? ns : ew;
    const exact::ExactRational q = grid.probability(loc.ell, loc.m);
    ++out.spaces;
    if (q == 0 || q == 1) {
      if (g.frequency(d) != q.get_d()) ++out.frozen_mismatches;
      continue;
    }
    const double z = std::abs(binomial_z(g.count(d), g.samples(), q.get_d()));
    if (z > out.max_abs_z) {
      out.max_abs_z = z;
      out.worst = d;
    }
  }
  return out;
}

}  // namespace aztec::stats
