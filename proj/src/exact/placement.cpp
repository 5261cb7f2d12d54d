#include <cstdlib>

#include "aztec/errors.hpp"
#include "aztec/exact.hpp"
#include "internal.hpp"

namespace aztec::exact {

bool is_valid_location(const LatticeLocation& loc) {
  if (loc.n < 1) return false;
  const long s = std::labs(loc.ell) + std::labs(loc.m);
  if (s > loc.n - 1) return false;
  return ((loc.ell + loc.m - loc.n + 1) % 2 + 2) % 2 == 0;
}

BiasParts bias_parts(const BiasValue& bias) {
  const auto& q = bias.value();
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
    throw ResourceError("bias numerator or denominator too large");
  }
  return {q.get_num().get_si(), q.get_den().get_si()};
}

ExactRational scale_by_bias(const ExactInteger& w, long e, long n, const BiasParts& p) {
  ExactInteger num = w;
  ExactInteger den = power(p.s, n);
  if (e >= 0) {
    num *= power(p.r, e);
  } else {
    den *= power(p.r, -e);
  }
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

void require_order(const LatticeLocation& loc) {
  if (loc.n < 1) throw DomainError("diamond order must be at least 1, got " + std::to_string(loc.n));
}

// C'(a,b) C'(b,a) for the order-(n+1) space (l, m), or 0 off the diamond.
ExactInteger creation_product(long ell, long m, long n, const BiasParts& p) {
  if (n < 0) return 0;
  if (std::labs(ell) + std::labs(m) > n) return 0;
  if (((ell + m + n) % 2 + 2) % 2 != 0) return 0;
  const long a = (ell + m + n) / 2;
  const long b = (ell - m + n) / 2;
  const long beta = p.s - p.r;
  return general_coeff(a, b, n, p.r, beta) * general_coeff(b, a, n, p.r, beta);
}

ExactInteger column_sum(const LatticeLocation& loc, const BiasParts& p) {
  ExactInteger w = 0;
  ExactInteger sk = 1;
  for (long k = 0; k < loc.n; ++k) {
    const long order = loc.n - k;
    if (std::labs(loc.ell) + std::labs(loc.m - k) <= order - 1) {
      w += sk * creation_product(loc.ell, loc.m - k, order - 1, p);
    }
    sk *= p.s;
  }
  return w;
}

}  // namespace

ExactRational creation_rate(const LatticeLocation& loc) {
  require_order(loc);
  if (!is_valid_location(loc)) return 0;
  const BiasParts p{1, 2};
  return scale_by_bias(creation_product(loc.ell, loc.m, loc.n - 1, p), loc.ell, loc.n - 1, p);
}

ExactRational biased_creation_rate(const LatticeLocation& loc, const BiasValue& bias) {
  require_order(loc);
  if (!is_valid_location(loc)) return 0;
  const BiasParts p = bias_parts(bias);
  return scale_by_bias(creation_product(loc.ell, loc.m, loc.n - 1, p), loc.ell, loc.n - 1, p);
}

Dyadic placement_probability_dyadic(const LatticeLocation& loc) {
  require_order(loc);
  if (!is_valid_location(loc)) return {0, 0};
  const BiasParts p{1, 2};
  return {column_sum(loc, p), loc.n};
}

ExactRational placement_probability(const LatticeLocation& loc) {
  return placement_probability_dyadic(loc).to_rational();
}

ExactRational biased_placement_probability(const LatticeLocation& loc, const BiasValue& bias) {
  require_order(loc);
  if (!is_valid_location(loc)) return 0;
  const BiasParts p = bias_parts(bias);
  return scale_by_bias(column_sum(loc, p), loc.ell + 1, loc.n, p);
}

ExactRational boundary_row_probability(long k, long n) {
  if (n < 1 || k < 0 || k > n) {
    throw DomainError("boundary row needs 0 <= k <= n and n >= 1");
  }
  ExactInteger total = 0;
  ExactInteger c;
  for (long i = k; i <= n; ++i) {
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    total += c;
  }
  return Dyadic{total, n}.to_rational();
}

LatticeLocation leftmost_row_location(long k, long n) {
  if (n < 1 || k < 1 || k > n) throw DomainError("row index must satisfy 1 <= k <= n");
  return {1 - k, n - k, n};
}

ExactRational PlacementCalculator::creation_rate(const LatticeLocation& loc) const {
  const auto key = std::make_tuple(loc.ell, loc.m, loc.n);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ExactRational value = bias_.is_uniform() ? exact::creation_rate(loc)
                                           : biased_creation_rate(loc, bias_);
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

ExactRational PlacementCalculator::placement(const LatticeLocation& loc) const {
  require_order(loc);
  if (!is_valid_location(loc)) return 0;
  ExactRational total = 0;
  for (long k = 0; k < loc.n; ++k) {
    const LatticeLocation below{loc.ell, loc.m - k, loc.n - k};
    if (is_valid_location(below)) total += creation_rate(below);
  }
  return total * bias_.value();
}

std::size_t PlacementCalculator::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

}  // namespace aztec::exact
