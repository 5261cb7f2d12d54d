#pragma once

// Exact placement statistics for domino tilings of Aztec diamonds.
//
// Coordinates: a north-going domino space is located at the midpoint (l, m)
// of its bottom edge. In the diamond of order n the valid locations satisfy
// |l| + |m| <= n - 1 and l + m == n - 1 (mod 2); every statistic is 0
// elsewhere.
//
// Creation rates are products of Krawtchouk coefficients c(a, b; n), the
// coefficient of z^a in (1 + z)^(n - b) (1 - z)^b, and placement
// probabilities are telescoping sums of creation rates down a column.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "aztec/parallel.hpp"

namespace aztec::exact {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

struct KrawtchoukIndex {
  long a = 0;
  long b = 0;
  long n = 0;
};

struct LatticeLocation {
  long ell = 0;
  long m = 0;
  long n = 1;  // diamond order

  friend bool operator==(const LatticeLocation&, const LatticeLocation&) = default;
};

// True iff the location is a north-going space of its diamond.
bool is_valid_location(const LatticeLocation& loc);

// A tiling bias p, 0 < p < 1, held exactly.
class BiasValue {
 public:
  explicit BiasValue(ExactRational p);
  static BiasValue uniform() { return BiasValue(ExactRational(1, 2)); }
  // Parses "1/3", "0.25", "1".
  static BiasValue parse(const std::string& text);

  const ExactRational& value() const { return p_; }
  double to_double() const { return p_.get_d(); }
  bool is_uniform() const { return p_ == ExactRational(1, 2); }

 private:
  ExactRational p_;
};

// Value m * 2^-exponent with an integer m; the natural form of every
// unbiased statistic (denominators are powers of two).
struct Dyadic {
  ExactInteger mantissa;
  long exponent = 0;

  ExactRational to_rational() const;
  double to_double() const;
};

// "numerator/denominator" (denominator always printed, lowest terms).
std::string to_string(const ExactRational& q);
// Natural logarithm of a positive rational without overflow.
double log_of(const ExactRational& q);
double to_double(const ExactRational& q);

ExactInteger krawtchouk_coeff(const KrawtchoukIndex& idx);
ExactRational biased_krawtchouk_coeff(const KrawtchoukIndex& idx, const BiasValue& bias);

ExactRational creation_rate(const LatticeLocation& loc);
ExactRational biased_creation_rate(const LatticeLocation& loc, const BiasValue& bias);

ExactRational placement_probability(const LatticeLocation& loc);
Dyadic placement_probability_dyadic(const LatticeLocation& loc);
ExactRational biased_placement_probability(const LatticeLocation& loc, const BiasValue& bias);

// 2^-n * sum_{i=k}^{n} C(n, i): probability that the leftmost squares of the
// top k rows are covered by horizontal dominos.
ExactRational boundary_row_probability(long k, long n);

// The north-going space whose left square is the leftmost square of row k
// (counted from the top, k >= 1) of the order-n diamond.
LatticeLocation leftmost_row_location(long k, long n);

// Checks c(b, a; n) b! (n - b)! == c(a, b; n) a! (n - a)!.
bool krawtchouk_reciprocity_check(const KrawtchoukIndex& idx);

// All coefficients of (alpha + beta z)^(n - b) (1 - z)^b for one n, indexed
// [b][a]. alpha = beta = 1 gives the Krawtchouk table c(a, b; n); for a bias
// p = r/s the choice alpha = r, beta = s - r gives r^(n-b) c_p(a, b; n).
class KrawtchoukTable {
 public:
  KrawtchoukTable(long alpha, long beta) : alpha_(alpha), beta_(beta) { reset(); }

  long order() const { return n_; }
  const ExactInteger& at(long a, long b) const { return rows_[b * (n_ + 1) + a]; }

  // Advances from order n to n + 1.
  void advance(Backend backend);
  // Rebuilds the table for order n from scratch.
  void build(long n, Backend backend);
  void reset();

 private:
  long alpha_;
  long beta_;
  long n_ = 0;
  std::vector<ExactInteger> rows_;
  std::vector<ExactInteger> scratch_;
};

// Placement probabilities of every north-going space of one diamond,
// computed order by order with the column recursion
//   W_n(a, b) = K_{n-1}(a, b) K_{n-1}(b, a) + s W_{n-1}(a - 1, b),
// where (a, b) = ((l + m + n - 1)/2, (l - m + n - 1)/2) and
// Pl_p(l, m; n) = W_n(a, b) r^(l + 1) / s^n for p = r/s.
class PlacementGrid {
 public:
  explicit PlacementGrid(long n, Backend backend = Backend::openmp);
  PlacementGrid(long n, const BiasValue& bias, Backend backend = Backend::openmp);

  long order() const { return current_; }
  const BiasValue& bias() const { return bias_; }

  ExactRational probability(long ell, long m) const;
  double probability_double(long ell, long m) const;
  // Raw column-sum integer W_n at a valid location.
  const ExactInteger& numerator(long ell, long m) const;

  // Every valid location of the diamond, row-major from the top.
  std::vector<LatticeLocation> locations() const;

  // Runs the same computation and reports the grid after each order 1..n.
  static void sweep(long n, const BiasValue& bias, Backend backend,
                    const std::function<void(const PlacementGrid&)>& visit);

 private:
  PlacementGrid(long n, const BiasValue& bias, Backend backend,
                const std::function<void(const PlacementGrid&)>* visit);
  void compute(Backend backend, const std::function<void(const PlacementGrid&)>* visit);

  long n_;
  BiasValue bias_;
  long r_ = 1;
  long s_ = 2;
  long current_ = 0;
  std::vector<ExactInteger> w_;  // [a][b], size current * current
};

// Column sums with a memo of creation rates keyed by (l, m, n), shared by
// repeated single-location queries. Concurrent readers, serialized writers.
class PlacementCalculator {
 public:
  PlacementCalculator() = default;
  explicit PlacementCalculator(const BiasValue& bias) : bias_(bias) {}

  ExactRational creation_rate(const LatticeLocation& loc) const;
  ExactRational placement(const LatticeLocation& loc) const;
  std::size_t memo_size() const;

 private:
  BiasValue bias_ = BiasValue::uniform();
  mutable std::shared_mutex mutex_;
  mutable std::map<std::tuple<long, long, long>, ExactRational> memo_;
};

}  // namespace aztec::exact
