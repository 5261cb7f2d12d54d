#include <cmath>
#include <complex>
#include <numbers>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"

namespace aztec::asym {

namespace {

constexpr double kPi = std::numbers::pi;

long inner_order(const exact::LatticeLocation& loc) {
  if (!exact::is_valid_location(loc)) {
    throw DomainError("(" + std::to_string(loc.ell) + "," + std::to_string(loc.m) +
                      ") is not a north-going space of order " + std::to_string(loc.n));
  }
  return loc.n - 1;
}

}  // namespace

double creation_rate_envelope(const exact::LatticeLocation& loc) {
  const double n = static_cast<double>(inner_order(loc));
  const double l = static_cast<double>(loc.ell);
  const double m = static_cast<double>(loc.m);
  const double inner = n * n - 2.0 * l * l - 2.0 * m * m;
  if (!(inner > 0.0)) {
    throw DomainError("location lies on or outside the arctic circle; use decay_bound_check");
  }
  return 4.0 / (kPi * std::sqrt(inner));
}

SaddleData creation_rate_estimate(const exact::LatticeLocation& loc) {
  using cd = std::complex<double>;
  SaddleData out;
  out.envelope = creation_rate_envelope(loc);
  const double n = static_cast<double>(loc.n - 1);
  const double u = static_cast<double>(loc.ell + loc.m) / n;
  const double v = static_cast<double>(loc.ell - loc.m) / n;
  const double a = (1.0 + u) * n / 2.0;
  const double b = (1.0 + v) * n / 2.0;
  const cd z1 = cd(-v, std::sqrt(1.0 - u * u - v * v)) / (1.0 - u);
  const cd one(1.0, 0.0);
  const cd second = -(n - b) / ((one + z1) * (one + z1)) - b / ((one - z1) * (one - z1)) +
                    a / (z1 * z1);
  const cd log_f = (n - b) * std::log(one + z1) + b * std::log(one - z1) - a * std::log(z1);
  const cd total = log_f - std::log(z1) - 0.5 * std::log(second);
  out.z1 = z1;
  out.phase = total.imag();
  const double c = std::cos(out.phase);
  out.estimate = out.envelope * c * c;
  return out;
}

double biased_creation_rate_envelope(const exact::LatticeLocation& loc, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("bias must lie strictly between 0 and 1");
  const double n = static_cast<double>(inner_order(loc));
  const double l = static_cast<double>(loc.ell);
  const double m = static_cast<double>(loc.m);
  const double inner = (p - p * p) * n * n - (1.0 - p) * l * l - p * m * m;
  if (!(inner > 0.0)) throw DomainError("location lies on or outside the arctic ellipse");
  return 2.0 / (kPi * std::sqrt(inner));
}

}  // namespace aztec::asym
