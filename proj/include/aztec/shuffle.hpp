#pragma once

// Random tilings of Aztec diamonds by domino shuffling.
//
// Starting from the empty order-0 diamond each step (1) deletes every pair
// of dominos about to collide (an N directly below an S, an E directly left
// of a W), (2) slides every other domino one unit in its direction of travel,
// (3) fills the uncovered 2x2 blocks with a horizontal pair with probability
// p, else a vertical pair.
//
// Random choices come from a counter-based generator keyed by
// (seed, step, block), so the result does not depend on the order in which
// blocks are visited or on the thread count.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aztec/exact.hpp"
#include "aztec/parallel.hpp"
#include "aztec/regions.hpp"

namespace aztec::shuffle {

using RandomSeed = std::uint64_t;

// splitmix64 finalizer applied to a chained key.
std::uint64_t mix(std::uint64_t x);
std::uint64_t counter_random(RandomSeed seed, std::uint64_t step, long i, long j,
                             std::uint64_t draw = 0);

// Bernoulli(p) coin for a rational p, exact when the numerator and
// denominator fit in 64 bits.
class Coin {
 public:
  explicit Coin(const exact::BiasValue& p);
  bool flip(RandomSeed seed, std::uint64_t step, long i, long j) const;

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 2;
  std::uint64_t limit_ = 0;  // rejection threshold for den_
  bool exact_ = true;
  double p_ = 0.5;
};

struct ShuffleOptions {
  Backend backend = Backend::openmp;
  // Checks after every step that the state tiles its diamond.
  bool validate = false;
  // Called with each intermediate tiling (order 1..n).
  std::function<void(const regions::Tiling&)> trace;
};

// Dense state: one code per cell, set on the anchor cell of each domino.
class ShuffleState {
 public:
  enum Code : std::uint8_t { empty = 0, horizontal = 1, vertical = 2 };

  ShuffleState(long capacity, RandomSeed seed,
               const exact::BiasValue& bias = exact::BiasValue::uniform());

  long order() const { return order_; }
  long capacity() const { return cap_; }
  RandomSeed seed() const { return seed_; }
  const exact::BiasValue& bias() const { return bias_; }

  // Grows the diamond by one order.
  void step(Backend backend = Backend::openmp);
  std::uint8_t code(regions::Cell c) const { return grid_[index(c.i, c.j)]; }
  // Throws IntegrityError unless the state tiles the current diamond.
  void validate() const;
  regions::Tiling tiling() const;
  std::vector<regions::Domino> dominos() const;

 private:
  long index(long i, long j) const { return (j + cap_ + 1) * stride_ + (i + cap_ + 1); }
  bool covered(long i, long j) const;

  long cap_;
  long stride_;
  RandomSeed seed_;
  exact::BiasValue bias_;
  Coin coin_;
  long order_ = 0;
  std::vector<std::uint8_t> grid_;
  std::vector<std::uint8_t> next_;
  std::vector<std::pair<long, long>> blocks_;
};

regions::Tiling sample_uniform(long n, RandomSeed seed, const ShuffleOptions& opts = {});
regions::Tiling sample_biased(long n, const exact::BiasValue& p, RandomSeed seed,
                              const ShuffleOptions& opts = {});
// Runs the shuffle to order n and returns the final dense state.
ShuffleState run(long n, const exact::BiasValue& p, RandomSeed seed, const ShuffleOptions& opts = {});

}  // namespace aztec::shuffle
