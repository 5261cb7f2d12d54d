#include <cmath>
#include <map>

#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/stats.hpp"
#include "doctest.h"

using namespace aztec;
using namespace aztec::regions;
using namespace aztec::shuffle;

using stats::chi_square_pvalue;

TEST_CASE("counter generator is a pure function of its key") {
  CHECK(counter_random(1, 2, 3, 4) == counter_random(1, 2, 3, 4));
  CHECK(counter_random(1, 2, 3, 4) != counter_random(1, 2, 4, 3));
  CHECK(counter_random(1, 2, -1, 0) != counter_random(1, 2, 0, -1));
  CHECK(counter_random(1, 2, 3, 4, 0) != counter_random(1, 2, 3, 4, 1));
  // the rational coin is close to its bias on a large key range
  const Coin third(exact::BiasValue(exact::ExactRational(1, 3)));
  long heads = 0;
  const long trials = 300000;
  for (long t = 0; t < trials; ++t) heads += third.flip(9, 1, t, -t);
  const double sigma = std::sqrt(trials * (1.0 / 3) * (2.0 / 3));
  CHECK(std::abs(heads - trials / 3.0) < 4 * sigma);
}

TEST_CASE("every step is a valid tiling and the sampler is deterministic") {
  for (RandomSeed seed : {0ULL, 1ULL, 77ULL, 0xdeadbeefULL}) {
    ShuffleOptions opts;
    opts.validate = true;
    long steps = 0;
    opts.trace = [&](const Tiling& t) {
      ++steps;
      CHECK(t.region().order_hint() == steps);
    };
    const Tiling a = sample_uniform(24, seed, opts);
    CHECK(steps == 24);
    ShuffleOptions serial;
    serial.backend = Backend::serial;
    CHECK(sample_uniform(24, seed, serial) == a);
    CHECK(sample_uniform(24, seed) == a);
    const exact::BiasValue b(exact::ExactRational(1, 4));
    opts.trace = nullptr;
    CHECK(sample_biased(24, b, seed, opts) == sample_biased(24, b, seed, serial));
  }
  CHECK(sample_uniform(16, 1) != sample_uniform(16, 2));
  CHECK(sample_biased(2, exact::BiasValue::uniform(), 5) == sample_uniform(2, 5));
  CHECK_THROWS_AS(sample_uniform(0, 1), DomainError);
}

TEST_CASE("order 1: both tilings at frequency 1/2") {
  const long trials = 100000;
  long horiz = 0;
  for (long s = 0; s < trials; ++s)
    horiz += sample_uniform(1, static_cast<RandomSeed>(s)).dominos()[0].orient == Orientation::horizontal;
  CHECK(std::abs(horiz - trials / 2.0) < 3 * std::sqrt(trials * 0.25));
}

TEST_CASE("order 2: chi-square uniformity over the 8 tilings") {
  const oracle::TilingIndex idx(aztec_diamond_ptr(2));
  std::vector<double> obs(idx.size(), 0.0);
  const long trials = 80000;
  for (long s = 0; s < trials; ++s) obs[idx.index_of(sample_uniform(2, 1000000 + s))] += 1;
  for (double o : obs) CHECK(o > 0);
  const double p = chi_square_pvalue(obs, std::vector<double>(idx.size(), trials / 8.0));
  MESSAGE("order-2 chi-square p = " << p);
  CHECK(p > 0.001);
}

TEST_CASE("biased p = 1/3, n <= 3: frequencies match the weighted oracle") {
  const exact::BiasValue bias(exact::ExactRational(1, 3));
  for (long n = 1; n <= 3; ++n) {
    const oracle::TilingIndex idx(aztec_diamond_ptr(n));
    const auto dist = oracle::tiling_distribution(aztec_diamond_ptr(n), bias);
    const long trials = 40000;
    std::vector<double> obs(idx.size(), 0.0), expect(idx.size());
    for (long s = 0; s < trials; ++s) obs[idx.index_of(sample_biased(n, bias, 500 + s))] += 1;
    for (std::size_t k = 0; k < idx.size(); ++k) expect[k] = trials * exact::to_double(dist[k]);
    const double p = chi_square_pvalue(obs, expect);
    MESSAGE("order " << n << " biased chi-square p = " << p);
    CHECK(p > 0.001);
  }
}

TEST_CASE("biased conditional block frequency") {
  // order 4, central block: among tilings that cover the block internally,
  // the horizontal pair has frequency p
  const exact::BiasValue bias(exact::ExactRational(1, 3));
  long internal = 0, horiz = 0;
  for (long s = 0; s < 40000; ++s) {
    const auto st = run(4, bias, 9000 + s);
    const bool h = st.code({-1, 0}) == ShuffleState::horizontal && st.code({-1, -1}) == ShuffleState::horizontal;
    const bool v = st.code({-1, -1}) == ShuffleState::vertical && st.code({0, -1}) == ShuffleState::vertical;
    internal += h || v;
    horiz += h;
  }
  const double f = static_cast<double>(horiz) / internal;
  const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / internal);
  MESSAGE("internal blocks " << internal << ", horizontal fraction " << f);
  CHECK(std::abs(f - 1.0 / 3) < 3 * sigma);
}

TEST_CASE("order 32: per-space frequencies against exact values") {
  const auto g = stats::empirical_placement(32, {}, 10000, 70000);
  const auto cmp = stats::compare_with_exact(g, {});
  MESSAGE("order-32 max z = " << cmp.max_abs_z);
  CHECK(cmp.frozen_mismatches == 0);
  CHECK(cmp.spaces == 4096);  // 4 n^2 spaces
  CHECK(cmp.max_abs_z <= 5.0);
}
