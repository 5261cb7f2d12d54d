#pragma once

// Monte Carlo aggregation over shuffled samples and the empirical checks
// built on it: placement frequencies, arctic boundary geometry, height
// concentration and the convergence of exact values to the limit shapes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "aztec/asymptotics.hpp"
#include "aztec/exact.hpp"
#include "aztec/parallel.hpp"
#include "aztec/regions.hpp"
#include "aztec/shuffle.hpp"

namespace aztec::stats {

using regions::Domino;
using regions::Vertex;
using shuffle::RandomSeed;

// Seed of the k-th sample of a run.
RandomSeed sample_seed(RandomSeed seed, long k);

// Upper tail p-value of Pearson's statistic with size - 1 degrees of freedom.
double chi_square_pvalue(const std::vector<double>& observed, const std::vector<double>& expected);
// sqrt(f (1 - f) / samples).
double standard_error(double f, long samples);
// Signed normal score of a binomial count: the probit of the exact tail
// probability in the direction of the deviation. Agrees with the usual
// (count - np) / sqrt(np(1-p)) when np(1-p) is large, stays meaningful when
// it is not.
double binomial_z(long count, long trials, double p);

// ---- placement frequencies ---------------------------------------------

class EmpiricalGrid {
 public:
  EmpiricalGrid(long n, long samples, std::vector<long> counts);

  long order() const { return n_; }
  long samples() const { return samples_; }
  long count(const Domino& d) const;
  double frequency(const Domino& d) const;
  double standard_error(const Domino& d) const;
  // Every domino space of the diamond, ordered by anchor.
  std::vector<Domino> spaces() const;

  // Dense slot of a domino space of the order-n diamond.
  static long slot(const regions::Region& r, const Domino& d);

 private:
  long n_;
  long samples_;
  regions::RegionPtr region_;
  std::vector<long> counts_;
};

EmpiricalGrid empirical_placement(long n, const std::optional<exact::BiasValue>& bias, long samples,
                                  RandomSeed seed, Backend backend = Backend::openmp);

struct ExactComparison {
  double max_abs_z = 0.0;
  Domino worst;
  std::size_t spaces = 0;
  // spaces with exact value 0 or 1 whose frequency differs from it
  std::size_t frozen_mismatches = 0;
};
ExactComparison compare_with_exact(const EmpiricalGrid& g, const std::optional<exact::BiasValue>& bias);

// ---- arctic boundary ---------------------------------------------------

struct BoundaryReport {
  std::vector<asym::NormalizedPoint> boundary_points;
  double max_deviation = 0.0;
  bool degenerate = false;  // no temperate domino at all
  double bias = 0.5;
};

// Euclidean distance from (x, y) to the ellipse x^2/p + y^2/(1-p) = 1
// (the circle of radius 1/sqrt 2 at p = 1/2).
double ellipse_distance(double x, double y, double p);

// Frontier: temperate dominos sharing an edge with a polar one, at their
// centres scaled by 1/n.
BoundaryReport arctic_report(const regions::Tiling& t, const std::optional<exact::BiasValue>& bias = {});

// Reports for `samples` shuffled order-n tilings, in sample order.
std::vector<BoundaryReport> arctic_reports(long n, const std::optional<exact::BiasValue>& bias, long samples,
                                           RandomSeed seed, Backend backend = Backend::openmp);
double median_deviation(const std::vector<BoundaryReport>& reports);

// ---- heights -----------------------------------------------------------

// Fewest edges on a lattice path inside the region from v to the boundary.
long boundary_path_length(const regions::Region& r, Vertex v);
// Fewest edges on a lattice path inside the region from v to w.
long path_length(const regions::Region& r, Vertex v, Vertex w);

struct TailRow {
  double c = 0.0;
  double frequency = 0.0;  // fraction of samples with |X - mean| > c sqrt(m)
  double bound = 0.0;      // 2 exp(-c^2 / 32)
};

struct VarianceReport {
  Vertex vertex;
  std::optional<Vertex> other;  // set for the difference H(v) - H(w)
  long m = 0;
  long samples = 0;
  double mean = 0.0;
  double sample_variance = 0.0;
  double bound = 0.0;  // 64 m
  std::vector<TailRow> tails;
  bool within_bounds() const;
};

VarianceReport height_concentration(long n, Vertex v, long samples, RandomSeed seed,
                                    const std::optional<exact::BiasValue>& bias = {},
                                    Backend backend = Backend::openmp);
VarianceReport difference_concentration(long n, Vertex v, Vertex w, long samples, RandomSeed seed,
                                        Backend backend = Backend::openmp);

struct MeanHeightReport {
  long n = 0;
  long samples = 0;
  double margin = 0.0;
  std::size_t compared = 0;
  double sup_deviation = 0.0;
  Vertex worst;
  // mean of h(v) / n at every vertex
  std::vector<std::pair<Vertex, double>> mean;
};

// Mean normalized heights against the limit shape, compared at vertices at
// least margin away (normalized) from the arctic circle.
MeanHeightReport mean_height_report(long n, long samples, RandomSeed seed, double margin = 0.1,
                                    Backend backend = Backend::openmp);

// ---- convergence of exact values ---------------------------------------

struct ConvergenceMask {
  double max_l1 = 0.8;           // |x| + |y| <= max_l1
  double singular_margin = 0.1;  // distance from the singular points
};

// The north-going space in the central 2x2 block: (0, -1) for even n,
// (0, 0) for odd n.
exact::LatticeLocation central_location(long n);

struct ConvergenceRow {
  long n = 0;
  double supnorm = 0.0;
  exact::LatticeLocation worst;
  std::size_t points = 0;
  exact::LatticeLocation central;
  double central_dev = 0.0;  // |Pl(central) - 1/4|, uniform only
};

ConvergenceRow convergence_row(long n, const std::optional<exact::BiasValue>& bias,
                               const ConvergenceMask& mask = {}, Backend backend = Backend::openmp);

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool supnorm_decreasing = false;
  double fitted_c = 0.0;  // n |Pl - 1/4| at the first order
  bool central_within = false;
};

ConvergenceReport convergence_report(const std::vector<long>& n_values,
                                     const std::optional<exact::BiasValue>& bias = {},
                                     const ConvergenceMask& mask = {}, Backend backend = Backend::openmp);

// ---- CSV ---------------------------------------------------------------

void write_placement_csv(std::ostream& os, const EmpiricalGrid& g, const std::optional<exact::BiasValue>& bias);
void write_convergence_csv(std::ostream& os, const ConvergenceReport& r);
void write_arctic_csv(std::ostream& os, const std::vector<BoundaryReport>& reports);
void write_variance_csv(std::ostream& os, const VarianceReport& r);

}  // namespace aztec::stats
