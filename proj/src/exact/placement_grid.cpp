#include <cstdlib>

#include "aztec/errors.hpp"
#include "aztec/exact.hpp"
#include "internal.hpp"

namespace aztec::exact {

PlacementGrid::PlacementGrid(long n, Backend backend)
    : PlacementGrid(n, BiasValue::uniform(), backend, nullptr) {}

PlacementGrid::PlacementGrid(long n, const BiasValue& bias, Backend backend)
    : PlacementGrid(n, bias, backend, nullptr) {}

PlacementGrid::PlacementGrid(long n, const BiasValue& bias, Backend backend,
                             const std::function<void(const PlacementGrid&)>* visit)
    : n_(n), bias_(bias) {
  if (n < 1) throw DomainError("diamond order must be at least 1, got " + std::to_string(n));
  const BiasParts p = bias_parts(bias);
  r_ = p.r;
  s_ = p.s;
  compute(backend, visit);
}

void PlacementGrid::sweep(long n, const BiasValue& bias, Backend backend,
                          const std::function<void(const PlacementGrid&)>& visit) {
  PlacementGrid grid(n, bias, backend, &visit);
}

void PlacementGrid::compute(Backend backend,
                            const std::function<void(const PlacementGrid&)>* visit) {
  KrawtchoukTable table(r_, s_ - r_);
  std::vector<ExactInteger> next;
  w_.clear();
  current_ = 0;
  const unsigned long s = static_cast<unsigned long>(s_);
  for (long order = 1; order <= n_; ++order) {
    // table holds order - 1
    const long width = order;
    const long prev = order - 1;
    next.resize(static_cast<std::size_t>(width * width));
    auto fill = [&](long a) {
      for (long b = 0; b < width; ++b) {
        ExactInteger& cell = next[a * width + b];
        mpz_mul(cell.get_mpz_t(), table.at(a, b).get_mpz_t(), table.at(b, a).get_mpz_t());
        if (a >= 1 && b < prev) {
          mpz_addmul_ui(cell.get_mpz_t(), w_[(a - 1) * prev + b].get_mpz_t(), s);
        }
      }
    };
    if (backend == Backend::openmp) {
#pragma omp parallel for schedule(dynamic, 4)
      for (long a = 0; a < width; ++a) fill(a);
    } else {
      for (long a = 0; a < width; ++a) fill(a);
    }
    w_.swap(next);
    current_ = order;
    if (visit != nullptr && *visit) (*visit)(*this);
    if (order < n_) table.advance(backend);
  }
}

const ExactInteger& PlacementGrid::numerator(long ell, long m) const {
  if (!is_valid_location({ell, m, current_})) {
    throw DomainError("(" + std::to_string(ell) + "," + std::to_string(m) +
                      ") is not a north-going space of order " + std::to_string(current_));
  }
  const long a = (ell + m + current_ - 1) / 2;
  const long b = (ell - m + current_ - 1) / 2;
  return w_[a * current_ + b];
}

ExactRational PlacementGrid::probability(long ell, long m) const {
  if (!is_valid_location({ell, m, current_})) return 0;
  return scale_by_bias(numerator(ell, m), ell + 1, current_, {r_, s_});
}

double PlacementGrid::probability_double(long ell, long m) const {
  if (!is_valid_location({ell, m, current_})) return 0.0;
  if (bias_.is_uniform()) return Dyadic{numerator(ell, m), current_}.to_double();
  return to_double(probability(ell, m));
}

std::vector<LatticeLocation> PlacementGrid::locations() const {
  std::vector<LatticeLocation> out;
  for (long m = current_ - 1; m >= -(current_ - 1); --m) {
    const long span = current_ - 1 - std::labs(m);
    for (long ell = -span; ell <= span; ell += 2) out.push_back({ell, m, current_});
  }
  return out;
}

}  // namespace aztec::exact
