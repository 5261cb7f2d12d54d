#include <cmath>
#include <limits>

#include "aztec/asymptotics.hpp"
#include "aztec/errors.hpp"

namespace aztec::asym {

exact::LatticeLocation nearest_location(const NormalizedPoint& pt, long n) {
  if (n < 1) throw DomainError("diamond order must be at least 1");
  const double tx = pt.x * static_cast<double>(n);
  const double ty = pt.y * static_cast<double>(n);
  const long l0 = std::lround(tx);
  const long m0 = std::lround(ty);
  exact::LatticeLocation best{0, 0, n};
  double best_d = std::numeric_limits<double>::infinity();
  bool found = false;
  for (long dl = -2; dl <= 2; ++dl) {
    for (long dm = -2; dm <= 2; ++dm) {
      const exact::LatticeLocation cand{l0 + dl, m0 + dm, n};
      if (!exact::is_valid_location(cand)) continue;
      const double d = std::hypot(cand.ell - tx, cand.m - ty);
      if (d < best_d - 1e-12) {
        best = cand;
        best_d = d;
        found = true;
      }
    }
  }
  if (!found) throw DomainError("no valid location near the requested point");
  return best;
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  double k = 0;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
    k += 1;
  }
  LineFit fit;
  if (k < 2) return fit;
  const double vx = sxx - sx * sx / k;
  const double vy = syy - sy * sy / k;
  const double cxy = sxy - sx * sy / k;
  if (vx <= 0) return fit;
  fit.slope = cxy / vx;
  fit.intercept = (sy - fit.slope * sx) / k;
  fit.r2 = vy > 0 ? (cxy * cxy) / (vx * vy) : 1.0;
  return fit;
}

DecayReport decay_bound_check(const NormalizedPoint& pt, const std::vector<long>& n_values) {
  if (!(pt.x * pt.x + pt.y * pt.y > 0.5)) {
    throw DomainError("decay check needs a point outside the arctic circle");
  }
  if (!in_diamond(pt)) throw DomainError("point lies outside the diamond");
  DecayReport rep;
  rep.limit = pt.y > 0.5 ? 1.0 : 0.0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> ns;
  for (long n : n_values) {
    const exact::LatticeLocation loc = nearest_location(pt, n);
    const exact::ExactRational cr = exact::creation_rate(loc);
    const exact::ExactRational pl = exact::placement_probability(loc);
    const exact::ExactRational defect = rep.limit == 1.0 ? exact::ExactRational(1 - pl) : pl;
    rep.orders.push_back(n);
    rep.locations.push_back(loc);
    rep.log_creation.push_back(cr > 0 ? exact::log_of(cr) : nan);
    rep.log_defect.push_back(defect > 0 ? exact::log_of(defect) : nan);
    ns.push_back(static_cast<double>(n));
  }
  const LineFit fc = fit_line(ns, rep.log_creation);
  const LineFit fd = fit_line(ns, rep.log_defect);
  rep.creation_slope = fc.slope;
  rep.creation_r2 = fc.r2;
  rep.defect_slope = fd.slope;
  rep.defect_r2 = fd.r2;
  return rep;
}

}  // namespace aztec::asym
