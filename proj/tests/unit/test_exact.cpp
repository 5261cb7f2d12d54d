#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

#include "aztec/errors.hpp"
#include "aztec/exact.hpp"
#include "doctest.h"

using namespace aztec::exact;

namespace {

// Direct polynomial product, coefficient list indexed by power of z.
std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
  std::vector<mpq_class> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

mpq_class poly_coeff(long a, long b, long n, const mpq_class& q) {
  std::vector<mpq_class> p{1};
  for (long k = 0; k < n - b; ++k) p = poly_mul(p, {1, q});
  for (long k = 0; k < b; ++k) p = poly_mul(p, {1, -1});
  return a < static_cast<long>(p.size()) ? p[a] : mpq_class(0);
}

// Brute-force tilings of the order-n diamond; accumulates weighted counts of
// north-going spaces keyed by (l, m).
struct Brute {
  long n;
  mpq_class p;
  std::map<std::pair<long, long>, bool> covered;
  std::vector<std::pair<long, long>> cells;
  std::vector<std::pair<int, std::pair<long, long>>> placed;  // 0 = horizontal
  std::map<std::pair<long, long>, mpq_class> north;
  mpq_class total = 0;

  Brute(long order, mpq_class bias) : n(order), p(std::move(bias)) {
    for (long j = n - 1; j >= -n; --j)
      for (long i = -n; i < n; ++i)
        if (std::labs(2 * i + 1) + std::labs(2 * j + 1) <= 2 * n) {
          covered[{i, j}] = false;
          cells.push_back({i, j});
        }
  }
  bool inside(long i, long j) const { return covered.count({i, j}) > 0; }
  bool white(long i, long j) const { return ((i + j - n) % 2 + 2) % 2 == 0; }

  void leaf() {
    long h = 0;
    long v = 0;
    for (auto& [kind, c] : placed) (kind == 0 ? h : v)++;
    mpq_class w = 1;
    for (long k = 0; k < h / 2; ++k) w *= p;
    for (long k = 0; k < v / 2; ++k) w *= 1 - p;
    total += w;
    for (auto& [kind, c] : placed)
      if (kind == 0 && white(c.first, c.second)) north[{c.first + 1, c.second}] += w;
  }
  void run() {
    // first uncovered cell in order of increasing i then j
    std::pair<long, long> best;
    bool found = false;
    for (auto& [c, used] : covered)
      if (!used) {
        best = c;
        found = true;
        break;
      }
    if (!found) {
      leaf();
      return;
    }
    auto [i, j] = best;
    covered[{i, j}] = true;
    if (inside(i + 1, j) && !covered[{i + 1, j}]) {
      covered[{i + 1, j}] = true;
      placed.push_back({0, {i, j}});
      run();
      placed.pop_back();
      covered[{i + 1, j}] = false;
    }
    if (inside(i, j + 1) && !covered[{i, j + 1}]) {
      covered[{i, j + 1}] = true;
      placed.push_back({1, {i, j}});
      run();
      placed.pop_back();
      covered[{i, j + 1}] = false;
    }
    covered[{i, j}] = false;
  }
};

}  // namespace

TEST_CASE("krawtchouk coefficients match direct polynomial expansion") {
  for (long n = 0; n <= 9; ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; b <= n; ++b) {
        CHECK(mpq_class(krawtchouk_coeff({a, b, n})) == poly_coeff(a, b, n, 1));
        const BiasValue bias(mpq_class(2, 7));
        CHECK(biased_krawtchouk_coeff({a, b, n}, bias) == poly_coeff(a, b, n, mpq_class(5, 2)));
      }
}

TEST_CASE("krawtchouk frozen values") {
  CHECK(krawtchouk_coeff({2, 1, 4}) == 0);
  CHECK(biased_krawtchouk_coeff({1, 4, 4}, BiasValue(mpq_class(1, 3))) == -4);
  CHECK(krawtchouk_coeff({0, 0, 5}) == 1);
  CHECK(krawtchouk_coeff({3, 2, 6}) == -4);
  CHECK(krawtchouk_coeff({5, 0, 4}) == 0);
  CHECK(krawtchouk_coeff({-1, 2, 4}) == 0);
  CHECK(krawtchouk_coeff({1, 0, 7}) == 7);
  CHECK(krawtchouk_coeff({0, 3, 5}) == 1);
  CHECK(biased_krawtchouk_coeff({0, 2, 4}, BiasValue(mpq_class(1, 3))) == 1);
  CHECK(biased_krawtchouk_coeff({1, 0, 3}, BiasValue::uniform()) == 3);
  CHECK_THROWS_AS(krawtchouk_coeff({1, 5, 4}), aztec::DomainError);
}

TEST_CASE("reciprocity identity holds for every index up to order 12") {
  for (long n = 0; n <= 12; ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; b <= n; ++b) CHECK(krawtchouk_reciprocity_check({a, b, n}));
}

TEST_CASE("krawtchouk table agrees with single coefficients, both backends") {
  KrawtchoukTable serial(1, 1);
  KrawtchoukTable parallel(3, 4);
  serial.build(15, aztec::Backend::serial);
  parallel.build(15, aztec::Backend::openmp);
  for (long a = 0; a <= 15; ++a)
    for (long b = 0; b <= 15; ++b) {
      CHECK(serial.at(a, b) == krawtchouk_coeff({a, b, 15}));
      // r^(n-b) c_p for p = 3/7
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 3, static_cast<unsigned long>(15 - b));
      CHECK(mpq_class(parallel.at(a, b)) ==
            biased_krawtchouk_coeff({a, b, 15}, BiasValue(mpq_class(3, 7))) * scale);
    }
}

TEST_CASE("small-order placement values") {
  CHECK(placement_probability({0, 0, 1}) == mpq_class(1, 2));
  CHECK(placement_probability({0, 1, 2}) == mpq_class(3, 4));
  CHECK(placement_probability({0, -1, 2}) == mpq_class(1, 4));
  CHECK(placement_probability({1, 0, 2}) == mpq_class(1, 4));
  CHECK(placement_probability({-1, 0, 2}) == mpq_class(1, 4));
  CHECK(placement_probability({0, 0, 2}) == 0);  // wrong parity
  CHECK(placement_probability({5, 0, 2}) == 0);
  CHECK_THROWS_AS(placement_probability({0, 0, 0}), aztec::DomainError);
}

TEST_CASE("placement equals brute-force enumeration up to order 4") {
  for (long n = 1; n <= 4; ++n) {
    Brute brute(n, mpq_class(1, 2));
    brute.run();
    CAPTURE(n);
    for (long ell = -n; ell <= n; ++ell)
      for (long m = -n; m <= n; ++m) {
        const mpq_class expected = brute.north.count({ell, m})
                                       ? mpq_class(brute.north[{ell, m}] / brute.total)
                                       : mpq_class(0);
        CAPTURE(ell);
        CAPTURE(m);
        CHECK(placement_probability({ell, m, n}) == expected);
      }
  }
}

TEST_CASE("biased placement equals weighted enumeration") {
  for (const mpq_class& p : {mpq_class(1, 3), mpq_class(3, 4)}) {
    const BiasValue bias(p);
    for (long n = 1; n <= 4; ++n) {
      Brute brute(n, p);
      brute.run();
      PlacementGrid grid(n, bias, aztec::Backend::serial);
      for (const auto& loc : grid.locations()) {
        const mpq_class expected = brute.north[{loc.ell, loc.m}] / brute.total;
        CHECK(biased_placement_probability(loc, bias) == expected);
        CHECK(grid.probability(loc.ell, loc.m) == expected);
      }
    }
  }
}

TEST_CASE("creation rate is twice the placement increment") {
  for (long n = 2; n <= 10; ++n) {
    PlacementGrid grid(n);
    for (const auto& loc : grid.locations()) {
      const mpq_class lower = placement_probability({loc.ell, loc.m - 1, n - 1});
      CHECK(creation_rate(loc) == 2 * (grid.probability(loc.ell, loc.m) - lower));
    }
  }
  const BiasValue bias(mpq_class(2, 5));
  for (long n = 2; n <= 8; ++n)
    for (const auto& loc : PlacementGrid(n, bias).locations()) {
      const mpq_class diff = biased_placement_probability(loc, bias) -
                             biased_placement_probability({loc.ell, loc.m - 1, n - 1}, bias);
      CHECK(biased_creation_rate(loc, bias) == diff / bias.value());
    }
}

TEST_CASE("grid backends and sweep agree with single-location queries") {
  PlacementGrid serial(24, aztec::Backend::serial);
  PlacementGrid parallel(24, aztec::Backend::openmp);
  for (const auto& loc : serial.locations()) {
    CHECK(serial.numerator(loc.ell, loc.m) == parallel.numerator(loc.ell, loc.m));
  }
  for (long ell : {-5L, 0L, 3L}) {
    const long m = ell % 2 == 0 ? 1 : 0;
    CHECK(serial.probability(ell, m) == placement_probability({ell, m, 24}));
  }
  long seen = 0;
  PlacementGrid::sweep(9, BiasValue::uniform(), aztec::Backend::openmp,
                       [&](const PlacementGrid& g) {
                         ++seen;
                         CHECK(g.order() == seen);
                         for (const auto& loc : g.locations())
                           CHECK(g.probability(loc.ell, loc.m) == placement_probability(loc));
                       });
  CHECK(seen == 9);
}

TEST_CASE("calculator memo reuses creation rates") {
  PlacementCalculator calc;
  CHECK(calc.placement({0, 1, 2}) == mpq_class(3, 4));
  const auto before = calc.memo_size();
  CHECK(calc.placement({0, 1, 2}) == mpq_class(3, 4));
  CHECK(calc.memo_size() == before);
  PlacementCalculator biased(BiasValue(mpq_class(1, 5)));
  CHECK(biased.placement({2, 1, 6}) ==
        biased_placement_probability({2, 1, 6}, BiasValue(mpq_class(1, 5))));
}

TEST_CASE("boundary rows") {
  CHECK(boundary_row_probability(0, 5) == 1);
  CHECK(boundary_row_probability(5, 5) == mpq_class(1, 32));
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(placement_probability(leftmost_row_location(k, n)) == boundary_row_probability(k, n));
}

TEST_CASE("bias parsing") {
  CHECK(BiasValue::parse("1/3").value() == mpq_class(1, 3));
  CHECK(BiasValue::parse("0.25").value() == mpq_class(1, 4));
  CHECK(BiasValue::parse("2/4").is_uniform());
  CHECK_THROWS_AS(BiasValue::parse("1"), aztec::DomainError);
  CHECK_THROWS_AS(BiasValue::parse("0"), aztec::DomainError);
  CHECK_THROWS_AS(BiasValue::parse("abc"), aztec::DomainError);
}

TEST_CASE("dyadic conversion survives huge exponents") {
  const Dyadic d = placement_probability_dyadic({0, 0, 301});
  CHECK(d.to_double() == doctest::Approx(to_double(d.to_rational())).epsilon(1e-12));
  CHECK(log_of(mpq_class(1, 8)) == doctest::Approx(-3 * std::log(2.0)));
}
