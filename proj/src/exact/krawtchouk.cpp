#include <algorithm>

#include "aztec/errors.hpp"
#include "aztec/exact.hpp"

namespace aztec::exact {

namespace {

ExactInteger ipow(long base, long e) {
  ExactInteger out;
  if (base >= 0) {
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(-base), static_cast<unsigned long>(e));
    if (e % 2 == 1) out = -out;
  }
  return out;
}

void check_index(const KrawtchoukIndex& idx) {
  if (idx.n < 0 || idx.b < 0 || idx.b > idx.n) {
    throw DomainError("Krawtchouk index out of range: a=" + std::to_string(idx.a) +
                      " b=" + std::to_string(idx.b) + " n=" + std::to_string(idx.n));
  }
}

}  // namespace

// Coefficient of z^a in (alpha + beta z)^(n-b) (1 - z)^b.
ExactInteger general_coeff(long a, long b, long n, long alpha, long beta) {
  const long m = n - b;
  const long jlo = std::max(0L, a - m);
  const long jhi = std::min(a, b);
  ExactInteger total = 0;
  ExactInteger t1;
  ExactInteger t2;
  for (long j = jlo; j <= jhi; ++j) {
    mpz_bin_uiui(t1.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(a - j));
    mpz_bin_uiui(t2.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(j));
    ExactInteger term = t1 * t2 * ipow(alpha, m - (a - j)) * ipow(beta, a - j);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

ExactInteger power(long base, long e) { return ipow(base, e); }

ExactInteger krawtchouk_coeff(const KrawtchoukIndex& idx) {
  check_index(idx);
  if (idx.a < 0 || idx.a > idx.n) return 0;
  return general_coeff(idx.a, idx.b, idx.n, 1, 1);
}

ExactRational biased_krawtchouk_coeff(const KrawtchoukIndex& idx, const BiasValue& bias) {
  check_index(idx);
  if (!bias.value().get_num().fits_slong_p() || !bias.value().get_den().fits_slong_p()) {
    throw ResourceError("bias numerator or denominator too large");
  }
  if (idx.a < 0 || idx.a > idx.n) return 0;
  const long r = bias.value().get_num().get_si();
  const long s = bias.value().get_den().get_si();
  ExactRational q(general_coeff(idx.a, idx.b, idx.n, r, s - r), ipow(r, idx.n - idx.b));
  q.canonicalize();
  return q;
}

bool krawtchouk_reciprocity_check(const KrawtchoukIndex& idx) {
  check_index(idx);
  if (idx.a < 0 || idx.a > idx.n) throw DomainError("reciprocity needs 0 <= a <= n");
  auto fact = [](long k) {
    ExactInteger f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
  };
  const ExactInteger lhs =
      krawtchouk_coeff({idx.b, idx.a, idx.n}) * fact(idx.b) * fact(idx.n - idx.b);
  const ExactInteger rhs =
      krawtchouk_coeff({idx.a, idx.b, idx.n}) * fact(idx.a) * fact(idx.n - idx.a);
  return lhs == rhs;
}

void KrawtchoukTable::reset() {
  n_ = 0;
  rows_.assign(1, ExactInteger(1));
}

void KrawtchoukTable::advance(Backend backend) {
  const long n = n_;
  const long w_old = n + 1;
  const long w_new = n + 2;
  scratch_.resize(static_cast<std::size_t>(w_new * w_new));
  const ExactInteger* old = rows_.data();
  ExactInteger* out = scratch_.data();
  const long alpha = alpha_;
  const long beta = beta_;
  auto row = [&](long b) {
    ExactInteger* dst = out + b * w_new;
    if (b <= n) {
      const ExactInteger* src = old + b * w_old;
      for (long a = 0; a <= n + 1; ++a) {
        ExactInteger& d = dst[a];
        if (a <= n) {
          d = src[a];
          d *= alpha;
        } else {
          d = 0;
        }
        if (a >= 1) mpz_addmul_ui(d.get_mpz_t(), src[a - 1].get_mpz_t(), static_cast<unsigned long>(beta));
      }
    } else {
      const ExactInteger* src = old + n * w_old;
      for (long a = 0; a <= n + 1; ++a) {
        ExactInteger& d = dst[a];
        d = a <= n ? src[a] : ExactInteger(0);
        if (a >= 1) d -= src[a - 1];
      }
    }
  };
  if (backend == Backend::openmp) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long b = 0; b <= n + 1; ++b) row(b);
  } else {
    for (long b = 0; b <= n + 1; ++b) row(b);
  }
  rows_.swap(scratch_);
  n_ = n + 1;
}

void KrawtchoukTable::build(long n, Backend backend) {
  if (n < 0) throw DomainError("negative Krawtchouk table order");
  reset();
  for (long k = 0; k < n; ++k) advance(backend);
}

}  // namespace aztec::exact
