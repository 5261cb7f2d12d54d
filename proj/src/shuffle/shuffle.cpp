#include "aztec/shuffle.hpp"

#include <limits>
#include <string>

#include "aztec/errors.hpp"

namespace aztec::shuffle {

using regions::Cell;
using regions::Domino;
using regions::Orientation;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_random(RandomSeed seed, std::uint64_t step, long i, long j, std::uint64_t draw) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ step);
  h = mix(h ^ static_cast<std::uint64_t>(i));
  h = mix(h ^ static_cast<std::uint64_t>(j));
  return mix(h ^ draw);
}

Coin::Coin(const exact::BiasValue& p) : p_(p.to_double()) {
  const auto& q = p.value();
  if (q.get_num().fits_ulong_p() && q.get_den().fits_ulong_p()) {
    num_ = q.get_num().get_ui();
    den_ = q.get_den().get_ui();
    // largest multiple of den_ representable, for unbiased rejection
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    limit_ = max - (max % den_ + 1) % den_;
  } else {
    exact_ = false;
  }
}

bool Coin::flip(RandomSeed seed, std::uint64_t step, long i, long j) const {
  if (!exact_) {
    const double u = static_cast<double>(counter_random(seed, step, i, j) >> 11) * 0x1.0p-53;
    return u < p_;
  }
  if (den_ == 2) return (counter_random(seed, step, i, j) >> 63) < num_;
  for (std::uint64_t draw = 0;; ++draw) {
    const std::uint64_t x = counter_random(seed, step, i, j, draw);
    if (limit_ == std::numeric_limits<std::uint64_t>::max() || x <= limit_) return x % den_ < num_;
  }
}

ShuffleState::ShuffleState(long capacity, RandomSeed seed, const exact::BiasValue& bias)
    : cap_(capacity), stride_(2 * capacity + 3), seed_(seed), bias_(bias), coin_(bias) {
  if (capacity < 1) throw DomainError("shuffle order must be >= 1");
  grid_.assign(static_cast<std::size_t>(stride_ * stride_), empty);
  next_ = grid_;
}

bool ShuffleState::covered(long i, long j) const {
  return next_[index(i, j)] != empty || next_[index(i - 1, j)] == horizontal ||
         next_[index(i, j - 1)] == vertical;
}

namespace {

inline long half_width(long k, long j) { return j >= 0 ? k - j : k + j + 1; }

}  // namespace

void ShuffleState::step(Backend backend) {
  if (order_ >= cap_) throw DomainError("shuffle state is at capacity");
  const long k = order_;
  const bool par = backend == Backend::openmp;
  const long rows = 2 * (k + 1);

  // clear the rows of the next diamond
#pragma omp parallel for schedule(static) if (par)
  for (long r = 0; r < rows; ++r) {
    const long j = r - (k + 1);
    const long w = half_width(k + 1, j);
    for (long i = -w - 1; i <= w; ++i) next_[index(i, j)] = empty;
  }

  // destruction and sliding, reading grid_ and writing next_
#pragma omp parallel for schedule(static) if (par)
  for (long r = 0; r < 2 * k; ++r) {
    const long j = r - k;
    const long w = half_width(k, j);
    for (long i = -w; i < w; ++i) {
      const std::uint8_t c = grid_[index(i, j)];
      if (c == empty) continue;
      const bool parity = ((i + j - k) % 2 + 2) % 2 == 0;
      if (c == horizontal) {
        if (parity) {  // N, travels up
          if (grid_[index(i, j + 1)] != horizontal) next_[index(i, j + 1)] = horizontal;
        } else {  // S, travels down
          if (grid_[index(i, j - 1)] != horizontal) next_[index(i, j - 1)] = horizontal;
        }
      } else {
        if (!parity) {  // W: upper cell white, travels left
          if (grid_[index(i - 1, j)] != vertical) next_[index(i - 1, j)] = vertical;
        } else {  // E, travels right
          if (grid_[index(i + 1, j)] != vertical) next_[index(i + 1, j)] = vertical;
        }
      }
    }
  }

  // the uncovered cells split into 2x2 blocks; scanning from the top left,
  // the first uncovered cell of a block is its upper left square
  blocks_.clear();
  for (long j = k; j >= -k - 1; --j) {
    const long w = half_width(k + 1, j);
    for (long i = -w; i < w; ++i) {
      if (covered(i, j)) continue;
      if (j == -k - 1 || covered(i + 1, j) || covered(i, j - 1) || covered(i + 1, j - 1) ||
          half_width(k + 1, j - 1) <= i + 1 || -half_width(k + 1, j - 1) > i)
        throw IntegrityError("shuffle: uncovered area is not a union of 2x2 blocks");
      next_[index(i, j)] = horizontal;  // placeholder until the coin is flipped
      next_[index(i, j - 1)] = horizontal;
      blocks_.emplace_back(i, j);
    }
  }

  const std::uint64_t step_id = static_cast<std::uint64_t>(k + 1);
  const long nb = static_cast<long>(blocks_.size());
#pragma omp parallel for schedule(static) if (par)
  for (long b = 0; b < nb; ++b) {
    const auto [i, j] = blocks_[b];
    if (coin_.flip(seed_, step_id, i, j)) continue;
    next_[index(i, j)] = empty;
    next_[index(i, j - 1)] = vertical;
    next_[index(i + 1, j - 1)] = vertical;
  }

  grid_.swap(next_);
  order_ = k + 1;
}

void ShuffleState::validate() const {
  const long k = order_;
  std::vector<std::uint8_t> hits(grid_.size(), 0);
  for (long j = -k - 1; j <= k; ++j)
    for (long i = -k - 1; i <= k; ++i) {
      const std::uint8_t c = grid_[index(i, j)];
      if (c == empty) continue;
      const long i2 = c == horizontal ? i + 1 : i;
      const long j2 = c == horizontal ? j : j + 1;
      for (auto [a, b] : {std::pair{i, j}, std::pair{i2, j2}}) {
        if (b < -k || b >= k || a < -half_width(k, b) || a >= half_width(k, b))
          throw IntegrityError("shuffle: domino leaves the order-" + std::to_string(k) + " diamond");
        if (++hits[index(a, b)] > 1) throw IntegrityError("shuffle: overlapping dominos");
      }
    }
  for (long j = -k; j < k; ++j)
    for (long i = -half_width(k, j); i < half_width(k, j); ++i)
      if (hits[index(i, j)] != 1) throw IntegrityError("shuffle: uncovered square");
}

std::vector<Domino> ShuffleState::dominos() const {
  std::vector<Domino> out;
  const long k = order_;
  out.reserve(static_cast<std::size_t>(k * (k + 1)));
  for (long i = -k; i < k; ++i)
    for (long j = -k; j < k; ++j) {
      const std::uint8_t c = grid_[index(i, j)];
      if (c != empty) out.push_back({{i, j}, c == horizontal ? Orientation::horizontal : Orientation::vertical});
    }
  return out;
}

regions::Tiling ShuffleState::tiling() const {
  if (order_ < 1) throw DomainError("empty shuffle state has no tiling");
  return regions::Tiling(regions::aztec_diamond_ptr(order_), dominos());
}

ShuffleState run(long n, const exact::BiasValue& p, RandomSeed seed, const ShuffleOptions& opts) {
  if (n < 1) throw DomainError("order must be >= 1");
  ShuffleState st(n, seed, p);
  for (long k = 0; k < n; ++k) {
    st.step(opts.backend);
    if (opts.validate) st.validate();
    if (opts.trace) opts.trace(st.tiling());
  }
  return st;
}

regions::Tiling sample_uniform(long n, RandomSeed seed, const ShuffleOptions& opts) {
  return run(n, exact::BiasValue::uniform(), seed, opts).tiling();
}

regions::Tiling sample_biased(long n, const exact::BiasValue& p, RandomSeed seed, const ShuffleOptions& opts) {
  return run(n, p, seed, opts).tiling();
}

}  // namespace aztec::shuffle
