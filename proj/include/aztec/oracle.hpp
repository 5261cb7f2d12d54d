#pragma once

// Brute-force ground truth for small regions: exhaustive enumeration of
// tilings (branching on the leftmost-lowest uncovered cell, horizontal
// first), exact weighted statistics, a transfer-matrix tiling count, and
// helpers built on enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aztec/exact.hpp"
#include "aztec/regions.hpp"

namespace aztec::oracle {

using exact::ExactInteger;
using exact::ExactRational;
using regions::Domino;
using regions::RegionPtr;
using regions::Tiling;

struct OracleLimits {
  // Enumeration refuses regions whose transfer-matrix count exceeds this.
  std::uint64_t max_tilings = std::uint64_t{1} << 22;
  // Materialized enumerations are capped lower.
  std::uint64_t max_materialized = std::uint64_t{1} << 17;
};

struct TilingEnumeration {
  ExactInteger count;
  std::vector<Tiling> tilings;  // canonical order
};

// Number of tilings by a broken-profile transfer matrix.
ExactInteger count_tilings(const regions::Region& region);

// Visits every tiling in canonical order with its per-cell links and its
// number of horizontal dominos. Returns the count.
std::uint64_t for_each_tiling(const RegionPtr& region,
                              const std::function<void(const std::vector<regions::Link>&, long)>& visit,
                              const OracleLimits& limits = {});

TilingEnumeration enumerate_tilings(const RegionPtr& region, const OracleLimits& limits = {});

struct ExactStatistics {
  ExactInteger tiling_count;
  std::optional<exact::BiasValue> bias;
  // Every domino space of the region.
  std::map<Domino, ExactRational> placement;
  // For each 2x2 block: the two horizontal dominos together, and the two
  // vertical dominos together, keyed by the pair of spaces.
  std::map<std::pair<Domino, Domino>, ExactRational> pair;

  ExactRational probability(const Domino& d) const;
};

// Biased weights: p^(H/2) (1-p)^(V/2) for H horizontal and V vertical dominos.
ExactStatistics exact_statistics(const RegionPtr& region, const std::optional<exact::BiasValue>& bias = std::nullopt,
                                 const OracleLimits& limits = {});

// Probability of every tiling, in canonical order.
std::vector<ExactRational> tiling_distribution(const RegionPtr& region,
                                               const std::optional<exact::BiasValue>& bias = std::nullopt,
                                               const OracleLimits& limits = {});

// p_{ab,cd} == p_{ac,bd} == p_ab p_cd + p_ac p_bd for every 2x2 block.
bool block_lemma_check(const RegionPtr& region, const OracleLimits& limits = {});
bool block_lemma_check(const ExactStatistics& stats, const regions::Region& region);

// Canonical index <-> tiling.
class TilingIndex {
 public:
  explicit TilingIndex(const RegionPtr& region, const OracleLimits& limits = {});
  std::size_t size() const { return tilings_.size(); }
  const Tiling& at(std::size_t index) const { return tilings_.at(index); }
  // Throws DomainError for a tiling of another region.
  std::size_t index_of(const Tiling& t) const;

 private:
  RegionPtr region_;
  std::vector<Tiling> tilings_;
  std::map<std::vector<regions::Link>, std::size_t> lookup_;
};

// Expected height at every vertex over the tilings whose heights agree with
// f wherever f is defined (uniform weights). Entries are indexed like
// Region::vertex_index; vertices off the region hold 0. Throws
// InfeasibleError when no tiling agrees with f.
std::vector<ExactRational> expected_heights(const regions::PartialHeightFunction& f,
                                            const OracleLimits& limits = {});
// All height functions agreeing with f.
std::vector<regions::HeightFunction> enumerate_extensions(const regions::PartialHeightFunction& f,
                                                          const OracleLimits& limits = {});

struct EntropyEstimate {
  double bits_per_square = 0.0;
  std::size_t distinct = 0;
  std::size_t samples = 0;
  std::size_t area = 0;
  bool low_power = false;  // too few samples for the observed multiplicity
};

// Shannon entropy of the dominos lying wholly inside the patch, per square.
EntropyEstimate patch_entropy(const std::vector<Tiling>& samples, const std::vector<regions::Cell>& patch);

// CSV: kind,i,j,orientation,class,probability
void write_statistics_csv(std::ostream& os, const ExactStatistics& stats, const regions::Region& region);

}  // namespace aztec::oracle
