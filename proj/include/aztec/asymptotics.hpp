#pragma once

// Closed-form large-n limits: the arctangent placement formula and its
// biased version, level curves, the limiting average height function and
// its tilt, the inverse of the tilt map, and saddle-point estimates of
// creation rates.

#include <complex>
#include <vector>

#include "aztec/exact.hpp"

namespace aztec::asym {

struct NormalizedPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Tilt {
  double s = 0.0;  // dH/dx
  double t = 0.0;  // dH/dy
};

struct Directional {
  double pn = 0.0;
  double pe = 0.0;
  double ps = 0.0;
  double pw = 0.0;
};

struct FlaggedValue {
  double value = 0.0;
  bool singular_adjacent = false;  // inside the exclusion disc around a singular point
};

struct AsymOptions {
  double singular_radius = 0.05;
};

struct SaddleData {
  std::complex<double> z1;
  double envelope = 0.0;
  double phase = 0.0;
  double estimate = 0.0;
};

// Zero set of mix*(2x^2 + 2y^2 - 1) + (1 - mix)*(2y - 1)^2.
struct LevelEllipse {
  double level = 0.5;
  double mix = 0.0;

  double implicit(double x, double y) const;
  // Points of the curve spread along x, both branches.
  std::vector<NormalizedPoint> sample(int count) const;
};

struct DecayReport {
  std::vector<long> orders;
  std::vector<exact::LatticeLocation> locations;
  std::vector<double> log_creation;  // log Cr, NaN where Cr == 0
  std::vector<double> log_defect;    // log Pl or log(1 - Pl)
  double limit = 0.0;                // 0 or 1, the frozen value Pl tends to
  double creation_slope = 0.0;
  double creation_r2 = 0.0;
  double defect_slope = 0.0;
  double defect_r2 = 0.0;
};

bool in_diamond(const NormalizedPoint& pt);
// Distance to the nearest of the singular points (+-1/2, 1/2), or
// (+-p, 1 - p) for a bias p.
double singular_distance(const NormalizedPoint& pt, double p = 0.5);

double arctan_placement(const NormalizedPoint& pt);
FlaggedValue arctan_placement_flagged(const NormalizedPoint& pt, const AsymOptions& opts = {});
double biased_arctan_placement(const NormalizedPoint& pt, double p);
FlaggedValue biased_arctan_placement_flagged(const NormalizedPoint& pt, double p,
                                             const AsymOptions& opts = {});

Directional directional_placements(const NormalizedPoint& pt);
Directional biased_directional_placements(const NormalizedPoint& pt, double p);

LevelEllipse level_curve(double p_level);

double average_height(const NormalizedPoint& pt);
Tilt height_tilt(const NormalizedPoint& pt);
// Inverse of height_tilt on the temperate zone.
NormalizedPoint tilt_to_position(const Tilt& tilt);

// 1/(pi sqrt(t^2 - 2x^2 - 2y^2)) inside the cone, 0 outside, +inf on it.
double wave_kernel(double x, double y, double t);

SaddleData creation_rate_estimate(const exact::LatticeLocation& loc);
double creation_rate_envelope(const exact::LatticeLocation& loc);
double biased_creation_rate_envelope(const exact::LatticeLocation& loc, double p);

// Valid location of the order-n diamond closest to (x n, y n).
exact::LatticeLocation nearest_location(const NormalizedPoint& pt, long n);

DecayReport decay_bound_check(const NormalizedPoint& pt, const std::vector<long>& n_values);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace aztec::asym
