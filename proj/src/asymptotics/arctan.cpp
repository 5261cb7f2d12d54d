#include <cmath>
#include <limits>
#include <numbers>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"

namespace aztec::asym {

namespace {

constexpr double kPi = std::numbers::pi;

// x^2 + y^2 evaluated in an order independent of which coordinate is which,
// so the four rotations of a point see bit-identical radii.
double radius2(double x, double y) {
  const double a = std::abs(x);
  const double b = std::abs(y);
  return a < b ? a * a + b * b : b * b + a * a;
}

void require_inside(const NormalizedPoint& pt) {
  if (!in_diamond(pt)) {
    throw DomainError("normalized point (" + std::to_string(pt.x) + ", " + std::to_string(pt.y) +
                      ") lies outside |x| + |y| <= 1");
  }
}

void require_bias(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("bias must lie strictly between 0 and 1");
}

// Biased formula without the domain check, q = 1 - p passed explicitly so
// that swapping the roles of p and q is exact.
double placement_pq(double x, double y, double p, double q) {
  const double inner = p * q - (q * x * x + p * y * y);
  if (inner > 0.0) return 0.5 + std::atan((y - q) / std::sqrt(inner)) / kPi;
  if (y < q) return 0.0;
  if (y > q) return 1.0;
  return 0.5;  // exactly at a singular point
}

}  // namespace

bool in_diamond(const NormalizedPoint& pt) {
  return std::abs(pt.x) + std::abs(pt.y) <= 1.0 + 1e-12;
}

double singular_distance(const NormalizedPoint& pt, double p) {
  const double dy = pt.y - (1.0 - p);
  return std::min(std::hypot(pt.x - p, dy), std::hypot(pt.x + p, dy));
}

double arctan_placement(const NormalizedPoint& pt) {
  require_inside(pt);
  const double inner = 1.0 - 2.0 * radius2(pt.x, pt.y);
  if (inner > 0.0) return 0.5 + std::atan((2.0 * pt.y - 1.0) / std::sqrt(inner)) / kPi;
  if (pt.y < 0.5) return 0.0;
  if (pt.y > 0.5) return 1.0;
  return 0.5;
}

FlaggedValue arctan_placement_flagged(const NormalizedPoint& pt, const AsymOptions& opts) {
  return {arctan_placement(pt), singular_distance(pt) < opts.singular_radius};
}

double biased_arctan_placement(const NormalizedPoint& pt, double p) {
  require_inside(pt);
  require_bias(p);
  if (p == 0.5) return arctan_placement(pt);
  return placement_pq(pt.x, pt.y, p, 1.0 - p);
}

FlaggedValue biased_arctan_placement_flagged(const NormalizedPoint& pt, double p,
                                             const AsymOptions& opts) {
  return {biased_arctan_placement(pt, p), singular_distance(pt, p) < opts.singular_radius};
}

Directional directional_placements(const NormalizedPoint& pt) {
  require_inside(pt);
  return {arctan_placement({pt.x, pt.y}), arctan_placement({-pt.y, pt.x}),
          arctan_placement({-pt.x, -pt.y}), arctan_placement({pt.y, -pt.x})};
}

Directional biased_directional_placements(const NormalizedPoint& pt, double p) {
  require_inside(pt);
  require_bias(p);
  const double q = 1.0 - p;
  return {placement_pq(pt.x, pt.y, p, q), placement_pq(-pt.y, pt.x, q, p),
          placement_pq(-pt.x, -pt.y, p, q), placement_pq(pt.y, -pt.x, q, p)};
}

LevelEllipse level_curve(double p_level) {
  if (!(p_level > 0.0 && p_level < 1.0)) throw DomainError("level must lie strictly between 0 and 1");
  const double tn = std::tan(kPi * (p_level - 0.5));
  const double big_t = tn * tn;
  return {p_level, big_t / (1.0 + big_t)};
}

double LevelEllipse::implicit(double x, double y) const {
  return mix * (2.0 * x * x + 2.0 * y * y - 1.0) + (1.0 - mix) * (2.0 * y - 1.0) * (2.0 * y - 1.0);
}

std::vector<NormalizedPoint> LevelEllipse::sample(int count) const {
  std::vector<NormalizedPoint> out;
  if (count <= 0) return out;
  // Quadratic in y: A y^2 + B y + C(x) = 0.
  const double lam = mix;
  const double qa = 2.0 * lam + 4.0 * (1.0 - lam);
  const double qb = -4.0 * (1.0 - lam);
  if (lam == 0.0) {
    for (int i = 0; i < count; ++i) {
      const double x = -0.5 + (i + 0.5) / count;
      out.push_back({x, 0.5});
    }
    return out;
  }
  // x range where the discriminant is nonnegative.
  // disc = qb^2 - 4 qa (2 lam x^2 + 1 - 2 lam) >= 0
  const double x2max = (qb * qb / (4.0 * qa) - (1.0 - 2.0 * lam)) / (2.0 * lam);
  if (x2max <= 0.0) return out;
  const double xmax = std::sqrt(x2max);
  for (int i = 0; i < count; ++i) {
    const double x = -xmax + 2.0 * xmax * (i + 0.5) / count;
    const double qc = 2.0 * lam * x * x + 1.0 - 2.0 * lam;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    const double r = std::sqrt(disc);
    for (double y : {(-qb - r) / (2.0 * qa), (-qb + r) / (2.0 * qa)}) {
      if (std::abs(x) + std::abs(y) <= 1.0) out.push_back({x, y});
    }
  }
  return out;
}

double average_height(const NormalizedPoint& pt) {
  const Directional d = directional_placements(pt);
  return 2.0 * (pt.y * d.pn - pt.y * d.ps + (1.0 - pt.x) * d.pe + (1.0 + pt.x) * d.pw);
}

Tilt height_tilt(const NormalizedPoint& pt) {
  const Directional d = directional_placements(pt);
  return {2.0 * (d.pw - d.pe), 2.0 * (d.pn - d.ps)};
}

double wave_kernel(double x, double y, double t) {
  if (!(t > 0.0)) throw DomainError("wave kernel needs t > 0");
  const double inner = t * t - 2.0 * x * x - 2.0 * y * y;
  if (inner > 0.0) return 1.0 / (kPi * std::sqrt(inner));
  if (inner == 0.0) return std::numeric_limits<double>::infinity();
  return 0.0;
}

}  // namespace aztec::asym
