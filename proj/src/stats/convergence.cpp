#include <cmath>
#include <ostream>

#include "aztec/errors.hpp"
#include "aztec/format.hpp"
#include "aztec/stats.hpp"

namespace aztec::stats {

exact::LatticeLocation central_location(long n) {
  if (n < 1) throw DomainError("order must be >= 1");
  return n % 2 == 0 ? exact::LatticeLocation{0, -1, n} : exact::LatticeLocation{0, 0, n};
}

ConvergenceRow convergence_row(long n, const std::optional<exact::BiasValue>& bias, const ConvergenceMask& mask,
                               Backend backend) {
  const exact::BiasValue p = bias.value_or(exact::BiasValue::uniform());
  const double pd = p.to_double();
  const exact::PlacementGrid grid(n, p, backend);
  ConvergenceRow row;
  row.n = n;
  const double nd = static_cast<double>(n);
  for (const auto& loc : grid.locations()) {
    const asym::NormalizedPoint pt{loc.ell / nd, loc.m / nd};
    if (std::abs(pt.x) + std::abs(pt.y) > mask.max_l1) continue;
    if (asym::singular_distance(pt, pd) < mask.singular_margin) continue;
    const double limit = p.is_uniform() ? asym::arctan_placement(pt) : asym::biased_arctan_placement(pt, pd);
    const double err = std::abs(grid.probability_double(loc.ell, loc.m) - limit);
    ++row.points;
    if (err > row.supnorm) {
      row.supnorm = err;
      row.worst = loc;
    }
  }
  row.central = central_location(n);
  if (p.is_uniform()) row.central_dev = std::abs(grid.probability_double(row.central.ell, row.central.m) - 0.25);
  return row;
}

ConvergenceReport convergence_report(const std::vector<long>& n_values, const std::optional<exact::BiasValue>& bias,
                                     const ConvergenceMask& mask, Backend backend) {
  if (n_values.empty()) throw DomainError("convergence report needs at least one order");
  ConvergenceReport rep;
  for (long n : n_values) rep.rows.push_back(convergence_row(n, bias, mask, backend));
  rep.supnorm_decreasing = true;
  for (std::size_t k = 1; k < rep.rows.size(); ++k)
    if (!(rep.rows[k].supnorm < rep.rows[k - 1].supnorm)) rep.supnorm_decreasing = false;
  rep.fitted_c = static_cast<double>(rep.rows[0].n) * rep.rows[0].central_dev;
  rep.central_within = true;
  for (const auto& row : rep.rows)
    if (!(static_cast<double>(row.n) * row.central_dev <= rep.fitted_c * (1.0 + 1e-12)))
      rep.central_within = false;
  return rep;
}

void write_placement_csv(std::ostream& os, const EmpiricalGrid& g, const std::optional<exact::BiasValue>& bias) {
  const long n = g.order();
  const exact::BiasValue p = bias.value_or(exact::BiasValue::uniform());
  const exact::PlacementGrid ns(n, p);
  const exact::PlacementGrid ew(n, exact::BiasValue(1 - p.value()));
  const auto& r = *regions::aztec_diamond_ptr(n);
  os << output_header("placement n=" + std::to_string(n) + " samples=" + std::to_string(g.samples())) << '\n';
  os << "class,ell,m,exact,empirical,stderr\n";
  for (const Domino& d : g.spaces()) {
    const auto pd = regions::placed(d, r);
    const auto loc = regions::north_equivalent(d, n);
    const bool vertical_pair = pd.klass == regions::Klass::east || pd.klass == regions::Klass::west;
    const auto q = (vertical_pair ? ew : ns).probability(loc.ell, loc.m);
    os << regions::klass_letter(pd.klass) << ',' << pd.ell << ',' << pd.m << ',' << exact::to_string(q) << ','
       << format_real(g.frequency(d)) << ',' << format_real(g.standard_error(d)) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& r) {
  os << output_header("convergence") << '\n';
  os << "n,supnorm,central_dev,central_ell,central_m,points\n";
  for (const auto& row : r.rows)
    os << row.n << ',' << format_real(row.supnorm) << ',' << format_real(row.central_dev) << ',' << row.central.ell
       << ',' << row.central.m << ',' << row.points << '\n';
}

void write_arctic_csv(std::ostream& os, const std::vector<BoundaryReport>& reports) {
  os << output_header("arctic") << '\n';
  os << "sample_id,max_deviation,frontier_points,degenerate\n";
  for (std::size_t k = 0; k < reports.size(); ++k)
    os << k << ',' << format_real(reports[k].max_deviation) << ',' << reports[k].boundary_points.size() << ','
       << (reports[k].degenerate ? 1 : 0) << '\n';
}

void write_variance_csv(std::ostream& os, const VarianceReport& r) {
  os << output_header("variance") << '\n';
  os << "vx,vy,m,samples,mean,sample_variance,bound\n";
  os << r.vertex.x << ',' << r.vertex.y << ',' << r.m << ',' << r.samples << ',' << format_real(r.mean) << ','
     << format_real(r.sample_variance) << ',' << format_real(r.bound) << '\n';
  os << "c,tail_frequency,tail_bound\n";
  for (const auto& t : r.tails)
    os << format_real(t.c) << ',' << format_real(t.frequency) << ',' << format_real(t.bound) << '\n';
}

}  // namespace aztec::stats
